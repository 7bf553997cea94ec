#include "contactcalc/commands.hpp"

#include <numeric>
#include <sstream>

#include "contactcalc/errors.hpp"
#include "contactcalc/gradings.hpp"
#include "contactcalc/surgery.hpp"

namespace contactcalc::commands {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(const Bigrading& b) { return "(" + str(b.maslov) + "," + str(b.alexander) + ")"; }
std::string str(const D3Interval& i) { return "[" + str(i.lo) + "," + str(i.hi) + "]"; }

std::string one_based(const std::vector<std::size_t>& comps) {
    std::string out;
    for (std::size_t k = 0; k < comps.size(); ++k) out += (k ? "," : "") + std::to_string(comps[k] + 1);
    return out;
}

// Compares with the stored value under `label` when there is one.
void against_known(Report& report, const SmoothLinkRecord& record, const std::string& label, const std::string& name,
                   const std::string& computed, const std::string& note = {}) {
    if (const KnownD3* known = record.find_known(label)) {
        report.check(name, str(known->d3), computed, parse_source(known->source), note);
    } else {
        report.info(name, computed, Source::Derived, note);
    }
}

// Why the tau-Bennequin equality holds for the record, or empty when it is not known to.
std::string sharpness_witness(const CorpusEntry& entry) {
    const auto& r = entry.record;
    for (const auto& rep : entry.representatives) {
        if (gradings::is_sharp(rep, r.tau)) return "sharp representative " + rep.name();
    }
    if (r.max_self_linking && *r.max_self_linking == 2 * r.tau - r.n) return "maximal self-linking equals 2 tau - n";
    return {};
}

void add_stage_checks(Report& report, const LegendrianLinkData& link, const std::string& prefix) {
    for (std::size_t k = 1; k < link.components(); ++k) {
        std::vector<std::size_t> idx(k + 1);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        const auto stage = link.sublink(idx);
        const std::string tag = prefix + "stage " + std::to_string(k + 1) + ": ";
        try {
            const auto mats = surgery::build_matrices(stage, k);
            report.check(tag + "det(M0)", "0", exact::det(mats.m0).get_str(), Source::Identity,
                         "null-homology certificate");
            report.check(tag + "surgered tb", str(stage.tb(k)), surgery::surgered_tb(stage, k).str(),
                         Source::Identity);
            std::int64_t lk_sum = 0;
            for (std::size_t j = 0; j < k; ++j) lk_sum += stage.lk(j, k);
            report.check(tag + "surgered rot", str(stage.rot(k) - 2 * lk_sum), surgery::surgered_rot(stage, k).str(),
                         Source::Identity, "rot - 2 lk(L_k, earlier components)");
        } catch (const SingularMatrixError& e) {
            report.fail(tag + "surgery matrices", e.what(), Source::Identity);
        }
    }
}

}  // namespace

Report invariants(const LegendrianLinkData& link, const std::vector<std::int64_t>& taus, const CorpusEntry* entry) {
    Report report("invariants: " + link.name());
    const auto n = static_cast<std::int64_t>(link.components());
    report.info("components", str(n), Source::Identity);
    report.info("total tb", str(total_tb(link)), Source::Identity, "sum tb_i + 2 sum lk_ij");
    report.info("total rot", str(total_rot(link)), Source::Identity);
    report.info("self-linking", str(self_linking(link)), Source::Identity, "tb - rot");
    report.info("Alexander grading of invariant", str(gradings::alexander_of_invariant(link)), Source::Identity,
                "(tb - rot + n) / 2");
    std::vector<std::int64_t> all = taus;
    if (entry) all.insert(all.begin(), entry->record.tau);
    for (std::size_t k = 0; k < all.size(); ++k) {
        const std::int64_t tau = all[k];
        const bool from_corpus = entry && k == 0;
        report.info("sharp(tau=" + str(tau) + ")", str(gradings::is_sharp(link, tau)),
                    from_corpus ? Source::Literature : Source::Derived,
                    "sl == 2 tau - n is " + str(self_linking(link)) + " == " + str(2 * tau - n) +
                        (from_corpus ? "; tau from corpus" : ""));
    }
    return report;
}

Report invariants(const Corpus& corpus, const std::string& name, const std::vector<std::int64_t>& taus) {
    const auto ref = corpus.representative(name);
    return invariants(*ref.link, taus, ref.entry);
}

Report lutz_shift(const LegendrianLinkData& link, const Rational& d3, const CorpusEntry* entry) {
    Report report("lutz shift: " + link.name() + " at d3 = " + d3.str());
    const ContactDescriptor ambient{d3, "S3"};
    const auto closed = surgery::half_torsion_d3_shift(link, ambient);
    report.info("closed form d3", closed.d3.str(), Source::Identity, "d3 - tb + rot");
    try {
        const auto matrix = surgery::inductive_d3_shift(link, ambient);
        report.check("matrix path d3", closed.d3.str(), matrix.d3.str(), Source::Derived,
                     "agreement " + str(matrix == closed));
        add_stage_checks(report, link, "");
    } catch (const SingularMatrixError& e) {
        report.skip("matrix path d3", e.what(), Source::Derived);
    }
    if (entry && d3.is_zero()) {
        if (const KnownD3* known = entry->record.find_known("lutz:" + link.name())) {
            report.check("stored value", str(known->d3), closed.d3.str(), parse_source(known->source));
        }
    }
    return report;
}

Report lutz_shift(const Corpus& corpus, const std::string& name, const Rational& d3) {
    const auto ref = corpus.representative(name);
    return lutz_shift(*ref.link, d3, ref.entry);
}

Report predict(const CorpusEntry& entry) {
    const auto& r = entry.record;
    Report report("predictions: " + r.name);
    const ContactDescriptor ambient = ContactDescriptor::standard_sphere();

    const std::string witness = sharpness_witness(entry);
    if (!witness.empty()) {
        const auto main = gradings::predict_main_theorem(ambient, r.tau, r.n, Sharpness::Confirmed);
        against_known(report, r, "main", "main theorem d3", main.d3.str(), "d3 - 2 tau + n; " + witness);
    } else {
        report.skip("main theorem d3", "tau-Bennequin equality not confirmed", Source::Derived);
    }

    // Open book of a fibered link.
    std::optional<std::int64_t> binding;
    if (r.fibered && r.top_class) {
        binding = gradings::d3_from_gradings({r.top_class->maslov, r.top_class->alexander}, r.n);
        against_known(report, r, "binding", "binding d3", str(*binding), "2 Atop - Mtop + 1 - n");
    } else {
        report.skip("binding d3", r.fibered ? "no top class stored" : "not fibered", Source::Derived);
    }

    // Taut foliation families and the bounds they must satisfy.
    std::optional<std::pair<std::int64_t, std::int64_t>> taut;
    if (r.is_unknot()) {
        report.skip("taut families", "the unknot has compressible boundary", Source::Derived);
    } else if (!r.thurston_norm) {
        report.skip("taut families", "no Thurston norm stored", Source::Derived);
    } else if (auto m = gradings::taut_legendrian_maslov(r)) {
        const auto [xi, xi_prime] = gradings::taut_families(r, *m);
        taut = {xi.d3.to_int64(), xi_prime.d3.to_int64()};
        const std::string note = "Maslov grading " + str(*m);
        against_known(report, r, "taut-xi", "taut family xi d3", xi.d3.str(), note + "; 1 + ||L|| - M");
        against_known(report, r, "taut-xi-prime", "taut family xi' d3", xi_prime.d3.str(), note + "; 1 - M");
    } else {
        report.skip("taut families", "Maslov grading of the taut representative unknown", Source::Derived);
    }

    if (!r.is_unknot() && r.tau_star && r.thurston_norm && r.thickness) {
        const auto [lo, hi] = gradings::cor_d3_bounds(r);
        report.info("d3 bounds xi", str(lo), Source::Derived, "thickness " + str(*r.thickness));
        report.info("d3 bounds xi'", str(hi), Source::Derived);
        if (taut) {
            report.check("xi within bounds", "true", str(lo.contains(taut->first)), Source::Identity);
            report.check("xi' within bounds", "true", str(hi.contains(taut->second)), Source::Identity);
        }
    } else {
        report.skip("d3 bounds", r.is_unknot() ? "not defined for the unknot" : "needs tauStar, thurstonNorm, thickness",
                    Source::Derived);
    }

    if (!r.is_unknot() && r.thickness && *r.thickness == 0 && r.signature && r.thurston_norm) {
        try {
            const auto [a, b] = gradings::thin_d3(r);
            if (taut) {
                report.check("thin d3 xi", str(taut->first), str(a), Source::Identity, "(1 + ||L|| + sigma) / 2");
                report.check("thin d3 xi'", str(taut->second), str(b), Source::Identity, "(1 - ||L|| + sigma) / 2");
            } else {
                report.info("thin d3", "(" + str(a) + "," + str(b) + ")", Source::Derived);
            }
        } catch (const ParityError& e) {
            report.fail("thin d3", e.what(), Source::Identity);
        }
    } else {
        report.skip("thin d3", "needs a thin non-trivial link with signature", Source::Derived);
    }

    if (r.quasi_positive) {
        try {
            against_known(report, r, "qp", "quasi-positive d3", str(gradings::qp_prediction(r)), "chi4");
        } catch (const DataError& e) {
            report.fail("quasi-positive d3", e.what(), Source::Identity);
        }
    } else {
        report.skip("quasi-positive d3", "not quasi-positive", Source::Derived);
    }

    for (const auto& rep : entry.representatives) {
        const auto shift = surgery::half_torsion_d3_shift(rep, ambient);
        against_known(report, r, "lutz:" + rep.name(), "lutz " + rep.name(), shift.d3.str(), "d3 - tb + rot");
        if (rep.components() < 2) continue;
        const gradings::TauLookup tau_of = [&](const std::vector<std::size_t>& comps) -> std::optional<std::int64_t> {
            auto it = entry.sublink_tau.find(comps);
            if (it == entry.sublink_tau.end()) return std::nullopt;
            if (!gradings::is_sharp(rep.sublink(comps), it->second)) return std::nullopt;
            return it->second;
        };
        for (const auto& p : gradings::sublink_predictions(rep, ambient, tau_of)) {
            const std::string key = rep.name() + ":" + one_based(p.components);
            against_known(report, r, "sublink:" + key, "sublink lutz " + key, p.lutz.d3.str(), "d3 - sl(J)");
            if (p.from_tau) {
                against_known(report, r, "sublink-tau:" + key, "sublink tau " + key, p.from_tau->d3.str(),
                              "d3 - 2 tau(J) + |J|");
            }
        }
    }
    return report;
}

Report predict(const Corpus& corpus, const std::string& name) { return predict(corpus.entry(name)); }

GridAnalysis analyze_grid(const GridDiagram& g) {
    GridAnalysis a{g, {}, {}, false};
    const auto cx = gridhom::kernels::build_tilde_complex(g);
    a.boundary_squares_to_zero = gridhom::kernels::boundary_squares_to_zero(cx);
    a.tilde = gridhom::kernels::homology(cx);
    a.hat = gridhom::deduce_hfl_hat(a.tilde, g);
    return a;
}

Report grid(const GridDiagram& input, bool mirror, const CorpusEntry* entry, const std::string& label) {
    const GridDiagram g = mirror ? grid::mirror(input) : input;
    Report report("grid: " + label + (mirror ? " (mirror)" : ""));
    const auto a = analyze_grid(g);
    const std::int64_t n = g.components();

    report.info("grid size", str(static_cast<std::int64_t>(g.size())), Source::Identity);
    if (entry) {
        report.check("components", str(entry->record.n), str(n), Source::Identity);
    } else {
        report.info("components", str(n), Source::Identity);
    }
    report.check("boundary squares to zero", "true", str(a.boundary_squares_to_zero), Source::Identity);
    report.info("tilde ranks", a.tilde.str(), Source::Derived, "total " + str(a.tilde.total()));
    report.info("hat ranks", a.hat.str(), Source::Derived, "total " + str(a.hat.total()));

    const std::int64_t th = gridhom::thickness(a.hat);
    if (entry && entry->record.thickness) {
        report.check("thickness", str(*entry->record.thickness), str(th), Source::Literature);
    } else {
        report.info("thickness", str(th), Source::Derived);
    }
    if (n == 1) {
        report.check("hat symmetry", "true", str(gridhom::is_symmetric(a.hat)), Source::Identity,
                     "rank(M,A) = rank(M-2A,-A)");
    }
    if (entry && n == 1 && entry->record.alexander_poly) {
        report.check("Euler characteristic", "true", str(gridhom::euler_char_oracle(a.hat, entry->record)),
                     Source::Derived, "against the stored Alexander polynomial");
    }

    try {
        const Bigrading top = gridhom::top_class(a.hat);
        if (entry && mirror && entry->record.top_class) {
            const Bigrading stored{entry->record.top_class->maslov, entry->record.top_class->alexander};
            report.check("top class", str(stored), str(top), Source::Literature);
        } else {
            report.info("top class", str(top), Source::Derived);
        }
        const std::int64_t d3 = gradings::d3_from_gradings(top, n);
        if (entry && mirror && entry->record.fibered) {
            against_known(report, entry->record, "binding", "binding d3 from top class", str(d3),
                          "2 Atop - Mtop + 1 - n");
        } else {
            report.info("binding d3 from top class", str(d3), Source::Derived, "2 Atop - Mtop + 1 - n");
        }
        report.info("second taut family d3", str(1 - top.maslov), Source::Derived, "1 - Mtop");
    } catch (const NonUniqueTopError& e) {
        report.skip("top class", e.what(), Source::Derived);
    }
    return report;
}

Report grid(const std::filesystem::path& path, bool mirror, const CorpusEntry* entry) {
    return grid(grid::load_grid(path), mirror, entry, path.filename().string());
}

Report corpus_check(const Corpus& corpus) {
    Report report("corpus check");
    for (const auto& entry : corpus.entries()) {
        const std::string prefix = entry.record.name + ": ";
        report.append(predict(entry), prefix);

        for (const auto& rep : entry.representatives) {
            const ContactDescriptor ambient = ContactDescriptor::standard_sphere();
            const auto closed = surgery::half_torsion_d3_shift(rep, ambient);
            if (rep.components() >= 2) {
                const auto matrix = surgery::inductive_d3_shift(rep, ambient);
                report.check(prefix + rep.name() + " matrix path", closed.d3.str(), matrix.d3.str(), Source::Derived);
                add_stage_checks(report, rep, prefix + rep.name() + " ");
            }
        }

        if (!sharpness_witness(entry).empty()) {
            const auto main = gradings::predict_main_theorem(ContactDescriptor::standard_sphere(), entry.record.tau,
                                                             entry.record.n, Sharpness::Confirmed);
            report.check(prefix + "main theorem equals -2 tau + n", str(-2 * entry.record.tau + entry.record.n),
                         main.d3.str(), Source::Identity);
        }

        if (entry.grid) {
            const GridDiagram g = grid::load_grid(*entry.grid);
            const std::string label = entry.grid->filename().string();
            report.append(grid(g, false, &entry, label), prefix + "grid ");
            report.append(grid(g, true, &entry, label), prefix + "mirror grid ");
        }
    }
    return report;
}

}  // namespace contactcalc::commands
