#include "hilbmatch/catalog.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace hilbmatch {

namespace {

constexpr std::string_view kNames[] = {
    "blownup-plane", "enriques", "k3", "elliptic-curve",
    "cy3-fiber-product", "hypersurface-w", "product",
};

constexpr std::string_view kBlownUpParams[] = {"p", "k"};
constexpr std::string_view kEnriquesParams[] = {"m"};
constexpr std::string_view kK3Params[] = {"r"};
constexpr std::string_view kEllipticParams[] = {"deg"};
constexpr std::string_view kCY3Params[] = {"m"};
constexpr std::string_view kHypersurfaceParams[] = {"x", "y", "z"};

std::string got1(std::string_view name, long long v) {
    std::ostringstream os;
    os << " (got " << name << "=" << v << ")";
    return os.str();
}

}  // namespace

std::string_view family_name(Family f) {
    return kNames[static_cast<int>(f)];
}

std::optional<Family> family_from_name(std::string_view name) {
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i)
        if (kNames[i] == name) return static_cast<Family>(i);
    return std::nullopt;
}

std::span<const std::string_view> family_param_names(Family f) {
    switch (f) {
        case Family::BlownUpPlane: return kBlownUpParams;
        case Family::EnriquesFm: return kEnriquesParams;
        case Family::K3: return kK3Params;
        case Family::EllipticCurve: return kEllipticParams;
        case Family::CY3FiberProduct: return kCY3Params;
        case Family::HypersurfaceW: return kHypersurfaceParams;
        case Family::Product: return {};
    }
    return {};
}

long long FamilyDescriptor::param(std::string_view name) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw std::out_of_range("descriptor has no parameter '" + std::string(name) + "'");
}

std::string descriptor_str(const FamilyDescriptor& d) {
    std::string out;
    if (d.family == Family::Product) {
        out += "product[";
        for (std::size_t i = 0; i < d.children.size(); ++i) {
            if (i) out += ", ";
            out += descriptor_str(d.children[i]);
        }
        out += ']';
        return out;
    }
    out += family_name(d.family);
    out += '(';
    for (std::size_t i = 0; i < d.params.size(); ++i) {
        if (i) out += ", ";
        out += d.params[i].first + "=" + std::to_string(d.params[i].second);
    }
    out += ')';
    return out;
}

RatPoly hilbert_surface(const SurfaceRRData& d) {
    return RatPoly{Rational(d.chiO), make_rational(-d.LK, 2), make_rational(d.L2, 2)};
}

RatPoly hilbert_cy3(const CY3RRData& d) {
    return RatPoly{Rational(0), make_rational(d.Lc2, 12), Rational(0), make_rational(d.L3, 6)};
}

RatPoly multiproj_chi(std::span<const int> dims, std::span<const LinearTwist> twists) {
    if (dims.size() != twists.size()) {
        std::ostringstream os;
        os << "multiprojective chi: " << dims.size() << " dimensions vs "
           << twists.size() << " twists";
        throw DimensionMismatch(os.str());
    }
    RatPoly result{Rational(1)};
    for (std::size_t i = 0; i < dims.size(); ++i) result *= proj_space_chi(dims[i], twists[i]);
    return result;
}

PolarizedFamily blownup_plane(long long p, long long k) {
    if (p <= 2 || k <= 0 || static_cast<__int128>(k) >= static_cast<__int128>(p) * p) {
        std::ostringstream os;
        os << "blownup-plane requires p > 2 and 0 < k < p^2 (got p=" << p << ", k=" << k << ")";
        throw AmplenessViolation(os.str());
    }
    const BigInt P = to_bigint(p), K = to_bigint(k);
    SurfaceRRData d{P * P - K, -3 * P + K, 1};
    RatPoly poly = hilbert_surface(d);
    if (k == 3 * p) {
        // On the k = 3p diagonal the linear term dies and the lead is p(p-3)/2.
        RatPoly closed{Rational(1), Rational(0), make_rational(P * (P - 3), 2)};
        if (!(poly == closed))
            throw InternalInconsistency("blownup-plane k=3p closed form mismatch");
    }
    return {{Family::BlownUpPlane,
             {{"p", p}, {"k", k}},
             {"blown-up points in general position"},
             {}},
            poly};
}

PolarizedFamily enriques_fm(long long m) {
    if (m < 1) throw AmplenessViolation("enriques requires m >= 1" + got1("m", m));
    // (F + mC)^2 = 2m, K numerically trivial, chi(O) = 1.
    RatPoly poly = hilbert_surface({2 * to_bigint(m), 0, 1});
    if (!(poly == RatPoly{Rational(1), Rational(0), to_rational(m)}))
        throw InternalInconsistency("enriques closed form mismatch");
    return {{Family::EnriquesFm, {{"m", m}}, {"generic Enriques surface"}, {}}, poly};
}

PolarizedFamily k3_polarized(long long r) {
    if (r < 1) throw AmplenessViolation("k3 requires r >= 1" + got1("r", r));
    RatPoly poly = hilbert_surface({2 * to_bigint(r), 0, 2});
    if (!(poly == RatPoly{Rational(2), Rational(0), to_rational(r)}))
        throw InternalInconsistency("k3 closed form mismatch");
    return {{Family::K3, {{"r", r}}, {}, {}}, poly};
}

PolarizedFamily elliptic_curve(long long deg) {
    if (deg < 1) throw AmplenessViolation("elliptic-curve requires deg >= 1" + got1("deg", deg));
    // Genus 1: chi(n eta) = deg(eta) n.
    RatPoly poly{Rational(0), to_rational(deg)};
    return {{Family::EllipticCurve, {{"deg", deg}}, {}, {}}, poly};
}

PolarizedFamily cy3_fiber_product(long long m) {
    if (m < 3) throw AmplenessViolation("cy3-fiber-product requires m >= 3" + got1("m", m));
    // H_m^3 = 6(m-1), H_m.c2 = 24.
    RatPoly poly = hilbert_cy3({6 * (to_bigint(m) - 1), 24});
    if (!(poly == RatPoly{Rational(0), Rational(2), Rational(0), to_rational(m - 1)}))
        throw InternalInconsistency("cy3-fiber-product closed form mismatch");
    return {{Family::CY3FiberProduct,
             {{"m", m}},
             {"generic relatively minimal rational elliptic surfaces with section"},
             {}},
            poly};
}

RatPoly hypersurface_w_from_sequence(long long x, long long y, long long z) {
    // 0 -> O(n x - 3, n y - 3, n z - 2) -> O(n x, n y, n z) -> O|_W -> 0
    const std::array<int, 3> dims{2, 2, 1};
    const std::array<LinearTwist, 3> ambient{{{x, 0}, {y, 0}, {z, 0}}};
    const std::array<LinearTwist, 3> twisted{{{x, -3}, {y, -3}, {z, -2}}};
    return multiproj_chi(dims, ambient) - multiproj_chi(dims, twisted);
}

RatPoly hypersurface_w_closed_form(long long x, long long y, long long z) {
    const BigInt X = to_bigint(x), Y = to_bigint(y), Z = to_bigint(z);
    const BigInt lead = 3 * X * Y * (X + Y) * Z + X * X * Y * Y;
    const BigInt quad = 6 * (X + Y) * Z + 2 * X * X + 9 * X * Y + 2 * Y * Y;
    return RatPoly{Rational(2), Rational(0), make_rational(quad, 2), Rational(0),
                   make_rational(lead, 2)};
}

PolarizedFamily hypersurface_w(long long x, long long y, long long z) {
    if (x < 1 || y < 1 || z < 1) {
        std::ostringstream os;
        os << "hypersurface-w requires x >= 1, y >= 1, z >= 1 (got x=" << x << ", y=" << y
           << ", z=" << z << ")";
        throw AmplenessViolation(os.str());
    }
    RatPoly via_sequence = hypersurface_w_from_sequence(x, y, z);
    RatPoly closed = hypersurface_w_closed_form(x, y, z);
    if (!(via_sequence == closed)) {
        std::ostringstream os;
        os << "hypersurface-w routes disagree at x=" << x << ", y=" << y << ", z=" << z
           << ": [" << via_sequence.key() << "] vs [" << closed.key() << "]";
        throw InternalInconsistency(os.str());
    }
    return {{Family::HypersurfaceW, {{"x", x}, {"y", y}, {"z", z}}, {}, {}}, via_sequence};
}

PolarizedFamily product_family(std::vector<PolarizedFamily> children) {
    if (children.empty()) throw EmptyProduct("product requires at least one factor");
    RatPoly poly{Rational(1)};
    FamilyDescriptor desc;
    desc.family = Family::Product;
    desc.children.reserve(children.size());
    for (auto& ch : children) {
        poly *= ch.polynomial;
        desc.children.push_back(std::move(ch.descriptor));
    }
    return {std::move(desc), std::move(poly)};
}

PolarizedFamily from_descriptor(const FamilyDescriptor& d) {
    switch (d.family) {
        case Family::BlownUpPlane: return blownup_plane(d.param("p"), d.param("k"));
        case Family::EnriquesFm: return enriques_fm(d.param("m"));
        case Family::K3: return k3_polarized(d.param("r"));
        case Family::EllipticCurve: return elliptic_curve(d.param("deg"));
        case Family::CY3FiberProduct: return cy3_fiber_product(d.param("m"));
        case Family::HypersurfaceW:
            return hypersurface_w(d.param("x"), d.param("y"), d.param("z"));
        case Family::Product: {
            std::vector<PolarizedFamily> children;
            children.reserve(d.children.size());
            for (const auto& ch : d.children) children.push_back(from_descriptor(ch));
            return product_family(std::move(children));
        }
    }
    throw std::invalid_argument("unknown family in descriptor");
}

}  // namespace hilbmatch
