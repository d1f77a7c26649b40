#include "tidiv/verdict.hpp"

#include <sstream>

namespace tidiv {

Rational bound_threshold(std::int64_t n, std::int64_t d) {
    if (n < 2 || d < 1) throw std::invalid_argument("bound threshold needs n >= 2, d >= 1");
    return rat((d - 1) * (d - 1)) - Rational(n * (n - 1), 2);
}

std::int64_t plane_curve_delta_bound(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("delta bound needs k >= 1");
    return (k - 1) * (k - 2) / 2;
}

bool normality_obstruction(std::int64_t n, std::int64_t d) {
    if (n < 2 || d < 1) throw std::invalid_argument("normality obstruction needs n >= 2, d >= 1");
    return (d - 1) * (d - 1) * 2 >= n * (n - 1);
}

bool degree_n_exclusion(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("degree-n exclusion needs n >= 2");
    return bound_threshold(n, n) >= rat(plane_curve_delta_bound(n));
}

const char* conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::HyperplaneOK: return "HyperplaneOK";
        case Conclusion::NotInvariant: return "NotInvariant";
        case Conclusion::ContradictionByBound: return "ContradictionByBound";
        case Conclusion::ContradictionByDeltaBound: return "ContradictionByDeltaBound";
        case Conclusion::ExcludedDegreeNPlusOne: return "ExcludedByCitedResult(d=n+1)";
        case Conclusion::ExcludedP3Quadric: return "ExcludedByCitedResult(P3,d=2)";
        case Conclusion::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

bool conclusive(Conclusion c) { return c != Conclusion::Inconclusive; }

namespace {

std::string rational_text(const Rational& r) { return to_string(r); }

// invariance plus the shared annotations; returns true when the pipeline
// should continue with the degree rules
bool run_common(Verdict& v, const Endomorphism& g, const Polynomial& form,
                const AnalyzeConfig& config) {
    auto deg = form.homogeneous_degree();
    if (!deg || *deg < 1)
        throw std::invalid_argument("divisor form must be homogeneous and nonconstant");
    v.n = static_cast<std::int64_t>(g.ambient_dim());
    v.d = *deg;
    v.m = g.degree();
    v.threshold = bound_threshold(v.n, v.d);

    v.invariance = is_totally_invariant(g, form, config.budget);
    if (!v.invariance.invariant) {
        std::ostringstream os;
        os << "division by F failed at stage " << v.invariance.failed_stage << " of " << v.m;
        v.rules.push_back({"not-invariant", Provenance::ComputedHere, os.str()});
        v.conclusion = Conclusion::NotInvariant;
        return false;
    }

    v.ramification = log_ramification(g, form, config.budget);
    v.singularity = nonnormal_degree(form, config.seed, config.budget);
    v.deg_z = v.singularity->z_degree;
    if (v.ramification->effective && v.singularity->sing_profile.dimension >= 0)
        v.z_avoids_ramification = component_avoids_ramification(
            *v.ramification, v.singularity->sing_ideal, config.budget);
    return true;
}

Endomorphism iterated(const Endomorphism& f, const AnalyzeConfig& config) {
    return config.iterate > 1 ? f.iterate(config.iterate) : f;
}

}  // namespace

Verdict analyze(const Endomorphism& f, const Polynomial& form, const AnalyzeConfig& config) {
    Verdict v;
    v.iterate_used = config.iterate >= 1 ? config.iterate : 1;
    Endomorphism g = iterated(f, config);
    if (!run_common(v, g, form, config)) return v;

    if (v.d == 1) {
        v.rules.push_back({"hyperplane", Provenance::ComputedHere, "d = 1"});
        v.conclusion = Conclusion::HyperplaneOK;
        return v;
    }
    if (v.d == v.n + 1) {
        v.rules.push_back({"degree-n-plus-one", Provenance::CitedExternal,
                           "totally invariant divisors of degree n+1 are unions of hyperplanes"});
        v.conclusion = Conclusion::ExcludedDegreeNPlusOne;
        return v;
    }
    if (v.d > v.n + 1) {
        // an effective logarithmic ramification divisor forces d <= n+1;
        // reaching this point means the input violates a caller contract
        v.rules.push_back({"degree-exceeds-anticanonical", Provenance::ComputedHere,
                           "d > n+1 contradicts the ramification formula for prime divisors"});
        v.conclusion = Conclusion::Inconclusive;
        return v;
    }
    if (v.d == v.n) {
        std::ostringstream os;
        os << "threshold " << rational_text(v.threshold) << " vs delta cap "
           << plane_curve_delta_bound(v.n) << "; strict excess is impossible for a prime divisor";
        v.rules.push_back({"degree-n-exclusion", Provenance::ComputedHere, os.str()});
        v.conclusion = degree_n_exclusion(v.n) ? Conclusion::ContradictionByDeltaBound
                                               : Conclusion::Inconclusive;
        return v;
    }

    v.comparison = c2_comparison(v.n, v.d, static_cast<std::int64_t>(*v.deg_z));
    std::ostringstream os;
    os << "deg Z = " << *v.deg_z << " vs threshold " << rational_text(v.threshold);
    if (v.comparison->contradiction) {
        v.rules.push_back({"c2-bound", Provenance::ComputedHere, os.str()});
        v.conclusion = Conclusion::ContradictionByBound;
    } else {
        v.rules.push_back({"c2-bound-satisfied", Provenance::ComputedHere, os.str()});
        v.conclusion = Conclusion::Inconclusive;
    }
    return v;
}

Verdict classify_p3(const Endomorphism& f, const Polynomial& form, const AnalyzeConfig& config) {
    if (f.ambient_dim() != 3)
        throw std::invalid_argument("the corollary table applies to P^3 only");
    Verdict v;
    v.iterate_used = config.iterate >= 1 ? config.iterate : 1;
    Endomorphism g = iterated(f, config);
    if (!run_common(v, g, form, config)) return v;

    switch (v.d) {
        case 1:
            v.rules.push_back({"hyperplane", Provenance::ComputedHere, "d = 1"});
            v.conclusion = Conclusion::HyperplaneOK;
            break;
        case 2:
            v.rules.push_back({"p3-quadric", Provenance::CitedExternal,
                               "invariant quadrics in P^3 are excluded by cited results"});
            v.conclusion = Conclusion::ExcludedP3Quadric;
            break;
        case 3: {
            std::ostringstream os;
            os << "threshold " << rational_text(v.threshold) << " vs delta cap "
               << plane_curve_delta_bound(3);
            v.rules.push_back({"degree-n-exclusion", Provenance::ComputedHere, os.str()});
            v.conclusion = degree_n_exclusion(3) ? Conclusion::ContradictionByDeltaBound
                                                 : Conclusion::Inconclusive;
            break;
        }
        case 4:
            v.rules.push_back({"degree-n-plus-one", Provenance::CitedExternal,
                               "totally invariant divisors of degree n+1 are unions of hyperplanes"});
            v.conclusion = Conclusion::ExcludedDegreeNPlusOne;
            break;
        default:
            v.rules.push_back({"degree-exceeds-anticanonical", Provenance::ComputedHere,
                               "d > n+1 contradicts the ramification formula for prime divisors"});
            v.conclusion = Conclusion::Inconclusive;
            break;
    }
    return v;
}

}  // namespace tidiv
