#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "contactcalc/errors.hpp"
#include "contactcalc/exact.hpp"

namespace contactcalc {

/// Classical invariants of an oriented n-component Legendrian link: per-component
/// Thurston-Bennequin and rotation numbers plus pairwise smooth linking numbers.
///
/// Construction validates the data: lk must be symmetric with zero diagonal and
/// the link-level tb - rot + n must be even. Null-homology itself cannot be
/// checked from classical data; the parity condition is only necessary.
class LegendrianLinkData {
public:
    LegendrianLinkData(std::string name, std::vector<std::int64_t> tb,
                       std::vector<std::int64_t> rot,
                       std::vector<std::vector<std::int64_t>> lk);

    static LegendrianLinkData knot(std::string name, std::int64_t tb, std::int64_t rot);

    const std::string& name() const { return name_; }
    std::size_t components() const { return tb_.size(); }
    std::int64_t tb(std::size_t i) const { return tb_.at(i); }
    std::int64_t rot(std::size_t i) const { return rot_.at(i); }
    std::int64_t lk(std::size_t i, std::size_t j) const { return lk_.at(i).at(j); }

    const std::vector<std::int64_t>& tb_values() const { return tb_; }
    const std::vector<std::int64_t>& rot_values() const { return rot_; }
    const std::vector<std::vector<std::int64_t>>& lk_matrix() const { return lk_; }

    /// The sublink on the given component indices, kept in the given order.
    LegendrianLinkData sublink(std::span<const std::size_t> indices) const;

    friend bool operator==(const LegendrianLinkData&, const LegendrianLinkData&) = default;

private:
    std::string name_;
    std::vector<std::int64_t> tb_;
    std::vector<std::int64_t> rot_;
    std::vector<std::vector<std::int64_t>> lk_;
};

// Link-level tb counts every pairwise linking twice: sum tb_i + 2 sum_{i<j} lk_ij.
std::int64_t total_tb(const LegendrianLinkData& link);
std::int64_t total_rot(const LegendrianLinkData& link);
// Self-linking of the transverse push-off, tb - rot.
std::int64_t self_linking(const LegendrianLinkData& link);

/// What the library can compute about a contact structure: its d3 invariant
/// (normalized to 0 on the standard tight sphere) and an opaque spin-c label.
struct ContactDescriptor {
    Rational d3;
    std::string spinc_label;

    static ContactDescriptor standard_sphere() { return {Rational(0), "S3"}; }

    friend bool operator==(const ContactDescriptor&, const ContactDescriptor&) = default;
};

struct TopClass {
    std::int64_t maslov = 0;     // Mtop
    std::int64_t alexander = 0;  // Atop
    friend bool operator==(const TopClass&, const TopClass&) = default;
};

struct KnownD3 {
    std::string label;
    std::int64_t d3 = 0;
    std::string source;
};

/// Curated smooth invariants of a corpus link. Fields the literature does not
/// supply for an entry are left empty; operations that need them throw.
struct SmoothLinkRecord {
    std::string name;
    std::int64_t n = 1;
    std::int64_t tau = 0;
    std::optional<std::int64_t> tau_star;
    std::optional<std::int64_t> signature;
    std::optional<std::int64_t> thurston_norm;
    std::optional<std::int64_t> thickness;
    std::optional<std::int64_t> genus3;
    std::optional<std::int64_t> chi4;
    std::optional<std::int64_t> max_self_linking;  // SL over all transverse representatives
    bool fibered = false;
    bool strongly_quasi_positive = false;
    bool quasi_positive = false;
    std::optional<std::map<std::int64_t, std::int64_t>> alexander_poly;
    std::optional<TopClass> top_class;
    std::vector<KnownD3> known_d3;

    bool is_unknot() const { return n == 1 && thurston_norm && *thurston_norm == 0; }
    const KnownD3* find_known(const std::string& label) const;
};

/// Checks the record-level invariants (knot tau equals tau*, fibered top-class
/// gradings against the genus). Throws DataError naming the entry.
void validate(const SmoothLinkRecord& record);

template <typename T>
const T& require(const std::optional<T>& field, const char* what, const std::string& entry) {
    if (!field) throw DataError(entry + ": missing field '" + what + "'");
    return *field;
}

}  // namespace contactcalc
