#pragma once

/*
 * Grading arithmetic relating Legendrian invariants to d3.
 *
 * The Legendrian invariant of an n-component link sits in Alexander grading
 * (tb - rot + n) / 2, and its Maslov grading M satisfies
 *
 *     M = -d3 + 2A + 1 - n.
 *
 * Everything below is a rearrangement of these two relations, specialized to
 * the situations where the rest of the data (tau, Thurston norm, signature,
 * thickness) pins down the gradings.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "contactcalc/model.hpp"

namespace contactcalc {

struct Bigrading {
    std::int64_t maslov = 0;
    std::int64_t alexander = 0;
    friend bool operator==(const Bigrading&, const Bigrading&) = default;
};

struct D3Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    friend bool operator==(const D3Interval&, const D3Interval&) = default;
};

// Passed to predict_main_theorem to record that the caller checked the
// tau-Bennequin equality. tau for a non-standard structure is external data,
// so the prediction cannot re-derive it.
enum class Sharpness { Unconfirmed, Confirmed };

struct SublinkPrediction {
    std::vector<std::size_t> components;  // 0-based, ascending
    ContactDescriptor lutz;               // d3 - (tb(J) - rot(J))
    std::optional<ContactDescriptor> from_tau;  // d3 - 2 tau(J) + |J| when tau(J) is known
};

namespace gradings {

std::int64_t alexander_of_invariant(const LegendrianLinkData& link);
std::int64_t d3_from_gradings(const Bigrading& b, std::int64_t n);
std::int64_t maslov_from_d3(std::int64_t d3, std::int64_t alexander, std::int64_t n);

bool is_sharp(const LegendrianLinkData& link, std::int64_t tau);

ContactDescriptor predict_main_theorem(const ContactDescriptor& ambient, std::int64_t tau, std::int64_t n,
                                       Sharpness sharpness);

// d3 of the two taut-foliation families, (1 + ||L|| - M, 1 - M), where M is
// the Maslov grading of the hat invariant of the taut representative.
std::pair<ContactDescriptor, ContactDescriptor> taut_families(const SmoothLinkRecord& record,
                                                              std::int64_t legendrian_maslov);

// Maslov grading of the taut representative's hat invariant when it can be
// read off the record: the fibered top class, or the single line of a thin link.
std::optional<std::int64_t> taut_legendrian_maslov(const SmoothLinkRecord& record);

std::pair<D3Interval, D3Interval> cor_d3_bounds(const SmoothLinkRecord& record);
std::pair<std::int64_t, std::int64_t> thin_d3(const SmoothLinkRecord& record);
std::int64_t qp_prediction(const SmoothLinkRecord& record);

using TauLookup = std::function<std::optional<std::int64_t>(const std::vector<std::size_t>&)>;

// One row per nonempty subset, in increasing bitmask order. `tau_of` is
// consulted for every subset and returns nullopt when tau(J) is unknown.
std::vector<SublinkPrediction> sublink_predictions(const LegendrianLinkData& link,
                                                   const ContactDescriptor& ambient,
                                                   const TauLookup& tau_of = {});

}  // namespace gradings
}  // namespace contactcalc
