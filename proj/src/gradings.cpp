#include "contactcalc/gradings.hpp"

#include <string>

#include "contactcalc/errors.hpp"

namespace contactcalc::gradings {

namespace {

void reject_unknot(const SmoothLinkRecord& record, const char* what) {
    if (record.is_unknot()) {
        throw ApplicabilityError(record.name + ": " + what + " excludes the unknot");
    }
}

D3Interval widen(const Rational& center, std::int64_t radius) {
    const Rational lo = center - Rational(radius);
    const Rational hi = center + Rational(radius);
    return {Rational(lo.floor()).to_int64(), Rational(hi.ceil()).to_int64()};
}

}  // namespace

std::int64_t alexander_of_invariant(const LegendrianLinkData& link) {
    const std::int64_t twice = self_linking(link) + static_cast<std::int64_t>(link.components());
    if (twice % 2 != 0) {
        throw ParityError(link.name() + ": tb - rot + n = " + std::to_string(twice) + " is odd");
    }
    return twice / 2;
}

std::int64_t d3_from_gradings(const Bigrading& b, std::int64_t n) { return 2 * b.alexander - b.maslov + 1 - n; }

std::int64_t maslov_from_d3(std::int64_t d3, std::int64_t alexander, std::int64_t n) {
    return -d3 + 2 * alexander + 1 - n;
}

bool is_sharp(const LegendrianLinkData& link, std::int64_t tau) {
    return self_linking(link) == 2 * tau - static_cast<std::int64_t>(link.components());
}

ContactDescriptor predict_main_theorem(const ContactDescriptor& ambient, std::int64_t tau, std::int64_t n,
                                       Sharpness sharpness) {
    if (sharpness != Sharpness::Confirmed) {
        throw PreconditionError("the tau-Bennequin equality was not confirmed for this link");
    }
    return {ambient.d3 - Rational(2 * tau) + Rational(n), ambient.spinc_label};
}

std::pair<ContactDescriptor, ContactDescriptor> taut_families(const SmoothLinkRecord& record,
                                                              std::int64_t legendrian_maslov) {
    reject_unknot(record, "the taut-foliation construction");
    const std::int64_t norm = require(record.thurston_norm, "thurstonNorm", record.name);
    const std::string label = "S3";
    return {{Rational(1 + norm - legendrian_maslov), label}, {Rational(1 - legendrian_maslov), label}};
}

std::optional<std::int64_t> taut_legendrian_maslov(const SmoothLinkRecord& record) {
    if (record.fibered && record.top_class) return record.top_class->maslov;
    if (record.thickness && *record.thickness == 0 && record.tau_star && record.thurston_norm) {
        // On the single supporting line A - M = -tau*, and A = (n + ||L||) / 2.
        const std::int64_t twice_a = record.n + *record.thurston_norm;
        if (twice_a % 2 != 0) return std::nullopt;
        return twice_a / 2 + *record.tau_star;
    }
    return std::nullopt;
}

std::pair<D3Interval, D3Interval> cor_d3_bounds(const SmoothLinkRecord& record) {
    const std::int64_t tau_star = require(record.tau_star, "tauStar", record.name);
    const std::int64_t norm = require(record.thurston_norm, "thurstonNorm", record.name);
    const std::int64_t th = require(record.thickness, "thickness", record.name);
    const Rational base = Rational(1) - Rational(tau_star);
    const Rational first = base - Rational(record.n - norm, 2);
    const Rational second = base - Rational(record.n + norm, 2);
    return {widen(first, th), widen(second, th)};
}

std::pair<std::int64_t, std::int64_t> thin_d3(const SmoothLinkRecord& record) {
    reject_unknot(record, "the thin-link formula");
    const std::int64_t th = require(record.thickness, "thickness", record.name);
    if (th != 0) throw ApplicabilityError(record.name + ": thickness " + std::to_string(th) + ", link is not thin");
    const std::int64_t sigma = require(record.signature, "signature", record.name);
    const std::int64_t norm = require(record.thurston_norm, "thurstonNorm", record.name);
    const std::int64_t a = 1 + norm + sigma;
    const std::int64_t b = 1 - norm + sigma;
    if (a % 2 != 0 || b % 2 != 0) {
        throw ParityError(record.name + ": 1 +- ||L|| + sigma is odd");
    }
    return {a / 2, b / 2};
}

std::int64_t qp_prediction(const SmoothLinkRecord& record) {
    if (!record.quasi_positive) throw ApplicabilityError(record.name + ": not quasi-positive");
    const std::int64_t chi4 = require(record.chi4, "chi4", record.name);
    // For quasi-positive links tau equals the big slice genus G4 = (n - chi4) / 2.
    if (chi4 != record.n - 2 * record.tau) {
        throw DataError(record.name + ": chi4 = " + std::to_string(chi4) + " but n - 2 tau = " +
                        std::to_string(record.n - 2 * record.tau));
    }
    return chi4;
}

std::vector<SublinkPrediction> sublink_predictions(const LegendrianLinkData& link,
                                                   const ContactDescriptor& ambient,
                                                   const TauLookup& tau_of) {
    const std::size_t n = link.components();
    if (n >= 20) throw ResourceError(link.name() + ": too many components to enumerate sublinks");
    std::vector<SublinkPrediction> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        SublinkPrediction p;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) p.components.push_back(i);
        }
        const auto sub = link.sublink(p.components);
        p.lutz = {ambient.d3 - Rational(self_linking(sub)), ambient.spinc_label};
        if (tau_of) {
            if (auto tau = tau_of(p.components)) {
                const auto m = static_cast<std::int64_t>(p.components.size());
                p.from_tau = ContactDescriptor{ambient.d3 - Rational(2 * *tau) + Rational(m), ambient.spinc_label};
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace contactcalc::gradings
