#include "arcrec/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "arcrec/errors.hpp"
#include "arcrec/polyroot.hpp"
#include "arcrec/series.hpp"

namespace arcrec {

std::string_view to_string(NotInRangeReason r) {
    switch (r) {
        case NotInRangeReason::InvalidMeanValue: return "invalid_mean_value";
        case NotInRangeReason::NormNotOne: return "norm_not_one";
        case NotInRangeReason::OffCircleRoot: return "off_circle_root";
        case NotInRangeReason::NonAlternatingRoots: return "non_alternating_roots";
        case NotInRangeReason::VerificationMismatch: return "verification_mismatch";
    }
    return "unknown";
}

namespace {

RecoveryOutcome rejected(NotInRangeReason reason, double norm, double mismatch = 0.0) {
    RecoveryOutcome out;
    out.status = RecoveryOutcome::Status::NotInRange;
    out.reason = reason;
    out.norm = norm;
    out.mismatch = mismatch;
    return out;
}

// The Taylor column of the Blaschke candidate attached to an arc union.
std::vector<Complex> blaschke_column(const ArcUnion& e, int n) {
    return phi_compose(herglotz_series(fourier_coefficients(e, n))).a;
}

double max_abs_difference(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// Steps 2-3 shared by recover and classify_toeplitz.  When fourier_input is
// non-null the recovered outcome's residual is the coefficient mismatch
// against it, otherwise the column mismatch.
RecoveryOutcome run_toeplitz_steps(const LowerToeplitz& m, const Tolerances& t,
                                   const FourierTuple* fourier_input) {
    RecoveryOutcome out;
    out.norm = operator_norm(m);
    if (std::fabs(out.norm - 1.0) > t.tol_norm)
        return rejected(NotInRangeReason::NormNotOne, out.norm);

    Polynomial q;
    try {
        q = norm_preserving_min_degree_vector(m, t.tol_eig);
    } catch (const EmptyEigenspace&) {
        return rejected(NotInRangeReason::NormNotOne, out.norm);
    }

    // M q carries convolution noise above the product's true degree; at
    // larger n it can clear the generic effective-degree floor and read as
    // phantom roots.  Cut both polynomials at the pipeline's own noise
    // scale; the column verification below catches any overcut.
    constexpr double pipeline_floor = 1e-8;
    const Polynomial numerator =
        truncated_to_effective_degree(apply(m, q), pipeline_floor);
    const Polynomial denominator = truncated_to_effective_degree(q, pipeline_floor);

    ArcUnion recovered_set;
    int order = 0;
    try {
        const RationalBlaschke f = from_quotient(numerator, denominator);
        recovered_set = level_set_arcs(f, t.tol_circle);
        order = f.order;
    } catch (const OffCircleRoot&) {
        return rejected(NotInRangeReason::OffCircleRoot, out.norm);
    } catch (const NonAlternatingRoots&) {
        return rejected(NotInRangeReason::NonAlternatingRoots, out.norm);
    } catch (const NotUnimodularOnCircle&) {
        return rejected(NotInRangeReason::VerificationMismatch, out.norm);
    } catch (const PoleInDisk&) {
        return rejected(NotInRangeReason::VerificationMismatch, out.norm);
    }

    const std::vector<Complex> column = blaschke_column(recovered_set, m.n());
    out.mismatch = max_abs_difference(column, m.col);
    if (out.mismatch > t.tol_verify)
        return rejected(NotInRangeReason::VerificationMismatch, out.norm, out.mismatch);

    out.status = RecoveryOutcome::Status::Recovered;
    out.arcs = recovered_set;
    out.order = order;
    out.residual = out.mismatch;
    if (fourier_input) {
        const FourierTuple again =
            fourier_coefficients(recovered_set, fourier_input->n());
        out.residual = max_abs_difference(again.c, fourier_input->c);
        if (out.residual > t.tol_verify)
            return rejected(NotInRangeReason::VerificationMismatch, out.norm, out.residual);
    }
    return out;
}

}  // namespace

RecoveryOutcome recover(const FourierTuple& c, const Tolerances& t) {
    const Complex c0 = c.c[0];
    if (std::fabs(c0.imag()) > t.tol_verify)
        return rejected(NotInRangeReason::InvalidMeanValue, 0.0);
    const double mean = c0.real();
    if (mean < -t.tol_verify || mean > 1.0 + t.tol_verify)
        return rejected(NotInRangeReason::InvalidMeanValue, 0.0);

    // Edge mean values: the conformal step is ill-conditioned at the strip
    // boundary, and the answer is forced anyway.
    const bool at_zero = mean <= t.tol_verify;
    const bool at_one = mean >= 1.0 - t.tol_verify;
    if (at_zero || at_one) {
        for (std::size_t k = 1; k < c.c.size(); ++k)
            if (std::abs(c.c[k]) > t.tol_verify)
                return rejected(NotInRangeReason::InvalidMeanValue, 0.0);
        RecoveryOutcome out;
        out.status = RecoveryOutcome::Status::Recovered;
        out.arcs = at_one ? ArcUnion::full_circle() : ArcUnion::empty_set();
        out.order = 0;
        out.norm = 1.0;
        double residual = std::fabs(mean - (at_one ? 1.0 : 0.0));
        for (std::size_t k = 1; k < c.c.size(); ++k)
            residual = std::max(residual, std::abs(c.c[k]));
        out.residual = residual;
        return out;
    }

    FourierTuple clean = c;
    clean.c[0] = Complex{mean, 0.0};
    const LowerToeplitz m = from_first_column(phi_compose(herglotz_series(clean)).a);
    return run_toeplitz_steps(m, t, &clean);
}

RecoveryOutcome classify_toeplitz(const LowerToeplitz& m, const Tolerances& t) {
    return run_toeplitz_steps(m, t, nullptr);
}

std::pair<double, double> two_arc_starting_points(Complex c0, Complex c1, Complex c2,
                                                  double tol_circle) {
    constexpr double threshold = 1e-10;
    const Complex e0 = std::exp(Complex{0.0, two_pi} * c0);
    const Complex e1 = Complex{0.0, -two_pi} * c1;
    const Complex e2 = Complex{0.0, -2.0 * two_pi} * c2;

    if (std::abs(e1) <= threshold)
        throw DegenerateFormula("two_arc_starting_points: E1 vanishes");
    const Complex denom = e1 * e1 * e0 + e2 * e0 - e2 + e1 * e1;
    if (std::abs(denom) <= threshold)
        throw DegenerateFormula("two_arc_starting_points: denominator of a vanishes");

    const Complex a =
        (e2 * std::conj(e1) + 2.0 * e1 - e1 * e1 * std::conj(e1) - 2.0 * e1 * e0) / denom;
    const Complex constant = (std::conj(e1) + (1.0 - e0) * a) / (e1 * e0);

    // z^2 - a z + constant = 0, solved with the sign choice that avoids
    // cancellation.
    const Complex disc = std::sqrt(a * a - 4.0 * constant);
    const Complex big = std::abs(a + disc) >= std::abs(a - disc) ? a + disc : a - disc;
    Complex r1, r2;
    if (std::abs(big) == 0.0) {
        r1 = r2 = Complex{0.0, 0.0};
    } else {
        r1 = big / 2.0;
        r2 = constant / r1;
    }

    for (const Complex& r : {r1, r2})
        if (std::fabs(std::abs(r) - 1.0) > tol_circle)
            throw OffCircleRoot("two_arc_starting_points: root off the unit circle");

    double a1 = reduce_angle(std::arg(r1));
    double a2 = reduce_angle(std::arg(r2));
    if (a1 > a2) std::swap(a1, a2);
    return {a1, a2};
}

namespace {

std::vector<double> endpoint_angles(const ArcUnion& e) {
    std::vector<double> out;
    out.reserve(2 * e.arcs().size());
    for (const Arc& a : e.arcs()) {
        out.push_back(reduce_angle(a.start));
        out.push_back(reduce_angle(a.end));
    }
    return out;
}

}  // namespace

double roundtrip_error(const ArcUnion& e, int n, const Tolerances& t) {
    const RecoveryOutcome out = recover(fourier_coefficients(e, n), t);
    if (!out.recovered())
        throw RoundTripFailure("roundtrip_error: recovery rejected a forward tuple");
    if (out.arcs.is_full() != e.is_full() || out.arcs.arc_count() != e.arc_count())
        throw RoundTripFailure("roundtrip_error: recovered set has a different shape");

    const std::vector<double> expected = endpoint_angles(e);
    const std::vector<double> got = endpoint_angles(out.arcs);
    double worst = 0.0;
    for (double a : expected) {
        double best = two_pi;
        for (double b : got) best = std::min(best, circular_distance(a, b));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace arcrec
