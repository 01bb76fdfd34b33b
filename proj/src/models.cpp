#include "ratetip/models.hpp"

#include <cmath>

namespace ratetip {

std::string family_name(Family f) {
    return f == Family::ashwin ? "ashwin" : "vdp";
}

Family parse_family(const std::string& name) {
    if (name == "ashwin") return Family::ashwin;
    if (name == "vdp") return Family::vdp;
    throw std::invalid_argument("unknown model family '" + name +
                                "' (expected ashwin or vdp)");
}

AshwinParams::AshwinParams(double epsilon_, double rate_, int degree_)
    : epsilon(epsilon_), rate(rate_), degree(degree_) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("AshwinParams: epsilon must be > 0");
    if (!(rate >= 0.0))
        throw std::invalid_argument("AshwinParams: rate must be >= 0");
    if (degree < 5 || degree % 2 == 0)
        throw std::invalid_argument(
            "AshwinParams: N must be odd and >= 5 (global stability of the "
            "quasi-static equilibrium requires it)");
}

VdpParams::VdpParams(double epsilon_, double rate_, double alpha_)
    : epsilon(epsilon_), rate(rate_), alpha(alpha_) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("VdpParams: epsilon must be > 0");
    if (!(rate >= 0.0))
        throw std::invalid_argument("VdpParams: rate must be >= 0");
    if (!(alpha > 1.0))
        throw std::invalid_argument("VdpParams: alpha must be > 1");
}

Family family_of(const ModelParams& p) {
    return std::holds_alternative<AshwinParams>(p) ? Family::ashwin : Family::vdp;
}

double epsilon_of(const ModelParams& p) {
    return std::visit([](const auto& q) { return q.epsilon; }, p);
}

double rate_of(const ModelParams& p) {
    return std::visit([](const auto& q) { return q.rate; }, p);
}

ModelParams with_rate(ModelParams p, double rate) {
    std::visit([rate](auto& q) { q.rate = rate; }, p);
    return p;
}

CoMovingState comoving_rhs(const CoMovingState& s, const ModelParams& p) {
    if (const auto* a = std::get_if<AshwinParams>(&p)) return ashwin_comoving_rhs(s, *a);
    return vdp_comoving_rhs(s, std::get<VdpParams>(p));
}

FullState full_rhs(const FullState& s, const ModelParams& p) {
    if (const auto* a = std::get_if<AshwinParams>(&p)) return ashwin_full_rhs(s, *a);
    return vdp_full_rhs(s, std::get<VdpParams>(p));
}

double reduced_rhs(double x1, const AshwinParams& p) {
    const double denom = 2.0 * x1 - 1.0;
    if (std::abs(denom) <= kSingularFoldGuard) throw SingularFoldError(x1);
    return (poly_sum(x1, p.degree) - p.rate) / denom;
}

std::vector<FoldPoint> fold_points(Family family) {
    if (family == Family::ashwin) {
        return {{0.5, critical_manifold(0.5, Family::ashwin)}};
    }
    return {{-1.0, critical_manifold(-1.0, Family::vdp)},
            {1.0, critical_manifold(1.0, Family::vdp)}};
}

}  // namespace ratetip
