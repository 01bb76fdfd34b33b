#pragma once

// Model families for rate-forced fast/slow systems: a polynomial-fold family
// and a linearly forced van der Pol oscillator, in their full non-autonomous
// form and in the autonomous co-moving reduction w = x2 + lambda.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ratetip {

enum class Family { ashwin, vdp };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Polynomial-fold family: eps*x1' = x2 + lambda + x1*(x1-1),
// x2' = -sum_{n=1..N} x1^n, lambda' = r.
struct AshwinParams {
    double epsilon;  // time-scale separation, > 0
    double rate;     // forcing rate r, >= 0
    int degree;      // N, odd and >= 5

    AshwinParams(double epsilon, double rate, int degree);
};

// Forced van der Pol family: eps*x1' = x2 + (x1 - x1^3/3) + lambda,
// x2' = -x1 - alpha, lambda' = r.
struct VdpParams {
    double epsilon;  // > 0
    double rate;     // >= 0
    double alpha;    // equilibrium offset, > 1

    VdpParams(double epsilon, double rate, double alpha);
};

using ModelParams = std::variant<AshwinParams, VdpParams>;

Family family_of(const ModelParams& p);
double epsilon_of(const ModelParams& p);
double rate_of(const ModelParams& p);
ModelParams with_rate(ModelParams p, double rate);

struct FullState {
    double x1;
    double x2;
    double lambda;
};

struct CoMovingState {
    double x1;
    double w;
};

// Point on the critical manifold where its attracting and repelling branches
// meet.
struct FoldPoint {
    double x1;
    double w;
};

// Thrown by reduced_rhs when evaluated inside the guard band around the fold,
// where the reduced slow flow blows up.
class SingularFoldError : public std::runtime_error {
  public:
    explicit SingularFoldError(double x1)
        : std::runtime_error("reduced flow is singular at the fold x1 = 1/2 "
                             "(evaluated at x1 = " + std::to_string(x1) + ")") {}
};

// Guard band |2*x1 - 1| <= kSingularFoldGuard treated as the fold singularity.
inline constexpr double kSingularFoldGuard = 1e-8;

// S(x) = sum_{n=1..N} x^n by Horner recurrence x*(1 + x*(1 + ...)).
inline double poly_sum(double x, int degree) {
    double acc = 1.0;
    for (int n = 1; n < degree; ++n) acc = 1.0 + x * acc;
    return x * acc;
}

// S'(x) = sum_{n=1..N} n*x^(n-1), Horner from the top coefficient.
inline double poly_sum_deriv(double x, int degree) {
    double acc = static_cast<double>(degree);
    for (int n = degree - 1; n >= 1; --n) acc = static_cast<double>(n) + x * acc;
    return acc;
}

// Fast nullcline height w(x1). The fast right-hand sides below subtract this
// exact value so the field is exactly zero on the manifold.
inline double critical_manifold(double x1, Family family) {
    if (family == Family::ashwin) return x1 - x1 * x1;
    return x1 * x1 * x1 / 3.0 - x1;
}

inline FullState ashwin_full_rhs(const FullState& s, const AshwinParams& p) {
    return {((s.x2 + s.lambda) - critical_manifold(s.x1, Family::ashwin)) / p.epsilon,
            -poly_sum(s.x1, p.degree), p.rate};
}

inline CoMovingState ashwin_comoving_rhs(const CoMovingState& s, const AshwinParams& p) {
    return {(s.w - critical_manifold(s.x1, Family::ashwin)) / p.epsilon,
            p.rate - poly_sum(s.x1, p.degree)};
}

inline FullState vdp_full_rhs(const FullState& s, const VdpParams& p) {
    return {((s.x2 + s.lambda) - critical_manifold(s.x1, Family::vdp)) / p.epsilon,
            -s.x1 - p.alpha, p.rate};
}

inline CoMovingState vdp_comoving_rhs(const CoMovingState& s, const VdpParams& p) {
    return {(s.w - critical_manifold(s.x1, Family::vdp)) / p.epsilon,
            p.rate - s.x1 - p.alpha};
}

CoMovingState comoving_rhs(const CoMovingState& s, const ModelParams& p);
FullState full_rhs(const FullState& s, const ModelParams& p);

// Desingularized slow flow on the critical manifold (time rescaled by
// -(2*x1 - 1); runs in reversed time on the repelling branch x1 > 1/2).
inline double desingularized_rhs(double x1, const AshwinParams& p) {
    return p.rate - poly_sum(x1, p.degree);
}

// Reduced slow flow x1' = (S(x1) - r)/(2*x1 - 1); singular at the fold.
double reduced_rhs(double x1, const AshwinParams& p);

inline CoMovingState to_comoving(const FullState& s) {
    return {s.x1, s.x2 + s.lambda};
}

// Inverse of to_comoving under linear forcing lambda = r*t.
inline FullState from_comoving(const CoMovingState& s, double t, double rate) {
    return {s.x1, s.w - rate * t, rate * t};
}

std::vector<FoldPoint> fold_points(Family family);

}  // namespace ratetip
