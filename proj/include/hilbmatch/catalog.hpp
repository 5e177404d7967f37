#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbmatch/errors.hpp"
#include "hilbmatch/ratpoly.hpp"

namespace hilbmatch {

enum class Family {
    BlownUpPlane,     // plane blown up in k generic points, polarized by ph - e_1 - ... - e_k
    EnriquesFm,       // Enriques surface polarized by F + mC
    K3,               // K3 surface with primitive polarization of self-intersection 2r
    EllipticCurve,    // elliptic curve with a degree-deg polarization
    CY3FiberProduct,  // fiber product of two rational elliptic surfaces, H = (m-2)F1 + F2 + D
    HypersurfaceW,    // smooth hypersurface of multidegree (3,3,2) in P^2 x P^2 x P^1
    Product,          // product of catalog families, polarized by the box sum
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
// Canonical parameter order. Empty for Product.
std::span<const std::string_view> family_param_names(Family f);

struct FamilyDescriptor {
    Family family = Family::Product;
    std::vector<std::pair<std::string, long long>> params;  // canonical order
    std::vector<std::string> assumptions;
    std::vector<FamilyDescriptor> children;  // nonempty only for Product

    long long param(std::string_view name) const;  // throws std::out_of_range if absent
    bool operator==(const FamilyDescriptor&) const = default;
};

// Human form: "blownup-plane(p=4, k=12)" or "product[k3(r=88), blownup-plane(p=4, k=12)]".
std::string descriptor_str(const FamilyDescriptor& d);

// Surface Riemann-Roch inputs: L^2, L.K, chi(O).
struct SurfaceRRData {
    BigInt L2, LK, chiO;
};

// Calabi-Yau threefold Riemann-Roch inputs: L^3, L.c2.
struct CY3RRData {
    BigInt L3, Lc2;
};

struct PolarizedFamily {
    FamilyDescriptor descriptor;
    RatPoly polynomial;
    bool operator==(const PolarizedFamily&) const = default;
};

// (L2/2) n^2 - (LK/2) n + chiO
RatPoly hilbert_surface(const SurfaceRRData& d);
// (L3/6) n^3 + (Lc2/12) n
RatPoly hilbert_cy3(const CY3RRData& d);
// chi(O(t_1(n), ..., t_k(n))) on P^{d_1} x ... x P^{d_k}; empty product is 1.
// Throws DimensionMismatch if the spans differ in length.
RatPoly multiproj_chi(std::span<const int> dims, std::span<const LinearTwist> twists);

// Guards throw AmplenessViolation naming the violated inequality.
PolarizedFamily blownup_plane(long long p, long long k);    // p > 2, 0 < k < p^2
PolarizedFamily enriques_fm(long long m);                   // m >= 1
PolarizedFamily k3_polarized(long long r);                  // r >= 1
PolarizedFamily elliptic_curve(long long deg);              // deg >= 1
PolarizedFamily cy3_fiber_product(long long m);             // m >= 3
PolarizedFamily hypersurface_w(long long x, long long y, long long z);  // x, y, z >= 1
// Throws EmptyProduct on an empty child list.
PolarizedFamily product_family(std::vector<PolarizedFamily> children);

// The two independent routes to the hypersurface polynomial. hypersurface_w
// computes both and throws InternalInconsistency if they ever disagree.
RatPoly hypersurface_w_from_sequence(long long x, long long y, long long z);
RatPoly hypersurface_w_closed_form(long long x, long long y, long long z);

// Rebuild a family from its descriptor (re-running all guards).
PolarizedFamily from_descriptor(const FamilyDescriptor& d);

}  // namespace hilbmatch
