#pragma once

// Coordinate models over the dual numbers and the ternions.
//
// Over dual(K) the map induced by the B-matrix of b = t*e reads
//     (z1, z2) -> (z1, t z1^2 + z2),
// over upper2(K) it reads
//     (z1, z2, z3) -> (z1, z2, z3 + t z1 z2).
// Both coordinate forms are theorems about the generic induced transform
// and are cross-checked against it in the suites, never assumed. Applying
// a non-affine bijection of this kind to the affine lines produces the
// "parabola model" line families materialized by model_line_set().

#include <cmath>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ringline/algebra.hpp"

namespace ringline {

struct AffinePoint {
    std::vector<elem> coords;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

inline AffinePoint to_affine(const KAlgebra& a, elem z) {
    auto c = a.coords(z);
    return {std::vector<elem>(c.begin(), c.end())};
}

inline elem from_affine(const KAlgebra& a, const AffinePoint& p) { return a.from_coords(p.coords); }

/// dual(K) shape: two-dimensional with basis {1, e}, e^2 = 0.
inline bool is_dual_algebra(const KAlgebra& a) {
    return a.dim == 2 && a.basis[0] == a.R().one &&
           a.R().mul(a.basis[1], a.basis[1]) == a.R().zero && a.rad.contains(a.basis[1]);
}

/// upper2(K) shape: basis {j1, j2, e} with j1+j2 = 1, j1 j2 = 0, e^2 = 0,
/// j1 e = e j2 = e, e j1 = j2 e = 0.
inline bool is_ternion_algebra(const KAlgebra& a) {
    if (a.dim != 3) return false;
    const Ring& R = a.R();
    elem j1 = a.basis[0], j2 = a.basis[1], e = a.basis[2];
    return R.add(j1, j2) == R.one && R.mul(j1, j1) == j1 && R.mul(j2, j2) == j2 &&
           R.mul(j1, j2) == R.zero && R.mul(j2, j1) == R.zero && R.mul(e, e) == R.zero &&
           R.mul(j1, e) == e && R.mul(e, j2) == e && R.mul(e, j1) == R.zero &&
           R.mul(j2, e) == R.zero;
}

inline AffinePoint dual_beta(const KAlgebra& a, elem t, const AffinePoint& p) {
    if (!is_dual_algebra(a)) throw error("dual_beta requires a dual-number algebra");
    const Ring& K = a.K();
    K.require(t);
    elem z1 = p.coords.at(0), z2 = p.coords.at(1);
    return {{z1, K.add(K.mul(t, K.mul(z1, z1)), z2)}};
}

inline AffinePoint dual_nu(const KAlgebra& a, elem l1, elem l2, const AffinePoint& p) {
    if (!is_dual_algebra(a)) throw error("dual_nu requires a dual-number algebra");
    const Ring& K = a.K();
    K.require(l1);
    K.require(l2);
    elem z1 = p.coords.at(0), z2 = p.coords.at(1);
    return {{z1, K.add(K.add(K.mul(z1, l1), z2), l2)}};
}

inline AffinePoint ternion_beta(const KAlgebra& a, elem t, const AffinePoint& p) {
    if (!is_ternion_algebra(a)) throw error("ternion_beta requires a ternion algebra");
    const Ring& K = a.K();
    K.require(t);
    elem z1 = p.coords.at(0), z2 = p.coords.at(1), z3 = p.coords.at(2);
    return {{z1, z2, K.add(z3, K.mul(t, K.mul(z1, z2)))}};
}

inline std::vector<elem> dual_beta_table(const KAlgebra& a, elem t) {
    std::vector<elem> out(a.R().n);
    for (int z = 0; z < a.R().n; ++z)
        out[z] = from_affine(a, dual_beta(a, t, to_affine(a, elem(z))));
    return out;
}

inline std::vector<elem> dual_nu_table(const KAlgebra& a, elem l1, elem l2) {
    std::vector<elem> out(a.R().n);
    for (int z = 0; z < a.R().n; ++z)
        out[z] = from_affine(a, dual_nu(a, l1, l2, to_affine(a, elem(z))));
    return out;
}

inline std::vector<elem> ternion_beta_table(const KAlgebra& a, elem t) {
    std::vector<elem> out(a.R().n);
    for (int z = 0; z < a.R().n; ++z)
        out[z] = from_affine(a, ternion_beta(a, t, to_affine(a, elem(z))));
    return out;
}

// ---------------------------------------------------------------------------
// Small polynomial kit over the field K (coefficients ascending).

namespace detail {

inline std::vector<elem> poly_mul(const Ring& K, const std::vector<elem>& p,
                                  const std::vector<elem>& q) {
    std::vector<elem> out(p.size() + q.size() - 1, K.zero);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            out[i + j] = K.add(out[i + j], K.mul(p[i], q[j]));
    return out;
}

inline void poly_trim(const Ring& K, std::vector<elem>& p) {
    while (!p.empty() && p.back() == K.zero) p.pop_back();
}

inline elem poly_eval(const Ring& K, std::span<const elem> p, elem x) {
    elem acc = K.zero;
    for (std::size_t i = p.size(); i-- > 0;) acc = K.add(K.mul(acc, x), p[i]);
    return acc;
}

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
inline std::vector<elem> interpolate(const Ring& K, std::span<const elem> xs,
                                     std::span<const elem> ys) {
    std::vector<elem> acc(1, K.zero);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<elem> term(1, K.one);
        elem denom = K.one;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term = poly_mul(K, term, {K.neg[xs[j]], K.one});
            denom = K.mul(denom, K.sub(xs[i], xs[j]));
        }
        elem scale = K.mul(ys[i], K.inverse(denom));
        if (acc.size() < term.size()) acc.resize(term.size(), K.zero);
        for (std::size_t d = 0; d < term.size(); ++d)
            acc[d] = K.add(acc[d], K.mul(scale, term[d]));
    }
    poly_trim(K, acc);
    return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Affine lines of the K-space R and curve classification.

/// All affine lines {v + k*u}: one canonical direction per K*-class.
inline std::vector<std::vector<elem>> affine_lines(const KAlgebra& a) {
    const Ring& R = a.R();
    const Ring& K = a.K();
    std::set<std::vector<elem>> dedup;
    for (int u = 1; u < R.n; ++u) {
        // canonical direction: first nonzero coordinate equals 1
        auto cu = a.coords(elem(u));
        int lead = -1;
        for (int i = 0; i < a.dim; ++i)
            if (cu[i] != K.zero) {
                lead = i;
                break;
            }
        if (lead < 0 || cu[lead] != K.one) continue;
        for (int v = 0; v < R.n; ++v) {
            std::vector<elem> pts;
            pts.reserve(K.n);
            for (int k = 0; k < K.n; ++k) pts.push_back(R.add(a.smul(elem(k), elem(u)), elem(v)));
            std::sort(pts.begin(), pts.end());
            dedup.insert(std::move(pts));
        }
    }
    return {dedup.begin(), dedup.end()};
}

/// Direction and base point of an affine line given as a point set.
inline std::pair<elem, elem> line_parameterization(const KAlgebra& a,
                                                   const std::vector<elem>& line) {
    const Ring& R = a.R();
    if (int(line.size()) != a.K().n) throw error("point set is not an affine line");
    std::vector<elem> sorted = line;
    std::sort(sorted.begin(), sorted.end());
    elem v = sorted[0];
    elem u = R.sub(sorted[1], v);
    std::vector<elem> rebuilt;
    for (int k = 0; k < a.K().n; ++k) rebuilt.push_back(R.add(a.smul(elem(k), u), v));
    std::sort(rebuilt.begin(), rebuilt.end());
    if (rebuilt != sorted) throw error("point set is not an affine line");
    return {u, v};
}

/// Vertical = parallel to the radical direction: the direction vector has
/// zero coordinates on every basis element outside the radical.
inline bool is_vertical_line(const KAlgebra& a, const std::vector<elem>& line) {
    elem u = line_parameterization(a, line).first;
    auto cu = a.coords(u);
    for (int i = 0; i < a.dim; ++i)
        if (!a.rad.contains(a.basis[i]) && cu[i] != a.K().zero) return false;
    return true;
}

inline bool is_regular_line(const KAlgebra& a, const std::vector<elem>& line) {
    return a.R().unit[line_parameterization(a, line).first];
}

enum class CurveKind { vertical_line, line, parabola, paraboloid_patch, other };

inline const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::vertical_line: return "vertical-line";
        case CurveKind::line: return "line";
        case CurveKind::parabola: return "parabola";
        case CurveKind::paraboloid_patch: return "paraboloid-patch";
        case CurveKind::other: return "other";
    }
    return "other";
}

struct ModelCurve {
    CurveKind kind = CurveKind::other;
    std::vector<elem> graph_coeffs;                // 2D graph z2 = sum_i c_i z1^i
    std::vector<std::vector<elem>> param_coeffs;   // per coordinate, in the line parameter
    std::vector<elem> points;                      // sorted ring elements
};

/// Classifies a planar point set as a function graph over z1 (dual models):
/// vertical when z1 is constant, otherwise by exact interpolation degree.
inline ModelCurve classify_graph2(const KAlgebra& a, std::vector<elem> pts) {
    if (!is_dual_algebra(a)) throw error("graph classification requires a planar algebra");
    const Ring& K = a.K();
    std::sort(pts.begin(), pts.end());
    ModelCurve c;
    c.points = pts;
    std::vector<elem> xs, ys;
    for (elem z : pts) {
        auto co = a.coords(z);
        xs.push_back(co[0]);
        ys.push_back(co[1]);
    }
    bool constant_x = std::all_of(xs.begin(), xs.end(), [&](elem x) { return x == xs[0]; });
    if (constant_x) {
        c.kind = CurveKind::vertical_line;
        c.graph_coeffs = {xs[0]};  // the fixed z1 value
        return c;
    }
    std::vector<elem> sx = xs;
    std::sort(sx.begin(), sx.end());
    if (std::adjacent_find(sx.begin(), sx.end()) != sx.end() || int(pts.size()) != K.n) {
        c.kind = CurveKind::other;
        return c;
    }
    c.graph_coeffs = detail::interpolate(K, xs, ys);
    std::size_t deg = c.graph_coeffs.empty() ? 0 : c.graph_coeffs.size() - 1;
    c.kind = deg <= 1 ? CurveKind::line
                      : (deg == 2 ? CurveKind::parabola : CurveKind::other);
    return c;
}

/// Image of an affine line under a total map, classified by the parametric
/// interpolation degree of each coordinate.
inline ModelCurve image_of_line(const KAlgebra& a, std::span<const elem> map,
                                const std::vector<elem>& line) {
    const Ring& R = a.R();
    const Ring& K = a.K();
    if (int(map.size()) != R.n) throw error("image_of_line requires a total map table");
    auto [u, v] = line_parameterization(a, line);
    std::vector<elem> params(K.n);
    for (int k = 0; k < K.n; ++k) params[k] = elem(k);
    std::vector<elem> imgs(K.n);
    for (int k = 0; k < K.n; ++k) imgs[k] = map[R.add(a.smul(elem(k), u), v)];

    ModelCurve c;
    c.points.assign(imgs.begin(), imgs.end());
    std::sort(c.points.begin(), c.points.end());
    c.points.erase(std::unique(c.points.begin(), c.points.end()), c.points.end());
    c.param_coeffs.resize(a.dim);
    std::size_t maxdeg = 0;
    for (int i = 0; i < a.dim; ++i) {
        std::vector<elem> ys(K.n);
        for (int k = 0; k < K.n; ++k) ys[k] = a.coords(imgs[k])[i];
        c.param_coeffs[i] = detail::interpolate(K, params, ys);
        if (!c.param_coeffs[i].empty()) maxdeg = std::max(maxdeg, c.param_coeffs[i].size() - 1);
    }
    if (maxdeg <= 1) {
        // direction = the linear parametric coefficients
        bool vertical = true;
        for (int i = 0; i < a.dim; ++i) {
            elem lin = c.param_coeffs[i].size() > 1 ? c.param_coeffs[i][1] : K.zero;
            if (!a.rad.contains(a.basis[i]) && lin != K.zero) vertical = false;
        }
        c.kind = vertical ? CurveKind::vertical_line : CurveKind::line;
    } else if (maxdeg == 2) {
        c.kind = CurveKind::parabola;
    } else {
        c.kind = CurveKind::other;
    }
    if (a.dim == 2 && c.kind != CurveKind::vertical_line) {
        // graph form over z1 when z1 is an affine parameter of the image
        const auto& p0 = c.param_coeffs[0];
        if (p0.size() == 2 && K.unit[p0[1]]) {
            std::vector<elem> xs(K.n), ys(K.n);
            for (int k = 0; k < K.n; ++k) {
                xs[k] = a.coords(imgs[k])[0];
                ys[k] = a.coords(imgs[k])[1];
            }
            c.graph_coeffs = detail::interpolate(K, xs, ys);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Orbit families of the standard parabola (dual models).

namespace detail {

inline std::vector<elem> apply_table_to_set(std::span<const elem> table,
                                            const std::vector<elem>& pts) {
    std::vector<elem> out;
    out.reserve(pts.size());
    for (elem z : pts) out.push_back(table[z]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// The image of the base line K under the quadratic map of t.
inline ModelCurve standard_parabola(const KAlgebra& a, elem t) {
    if (!is_dual_algebra(a)) throw error("the standard parabola lives over a dual-number algebra");
    std::vector<elem> base;
    for (int k = 0; k < a.K().n; ++k) base.push_back(a.scalar(elem(k)));
    auto table = dual_beta_table(a, t);
    return classify_graph2(a, detail::apply_table_to_set(table, base));
}

inline std::vector<ModelCurve> orbit_N(const KAlgebra& a, const ModelCurve& c) {
    if (!is_dual_algebra(a)) throw error("orbit_N is a dual-model operation");
    std::set<std::vector<elem>> dedup;
    for (int l1 = 0; l1 < a.K().n; ++l1)
        for (int l2 = 0; l2 < a.K().n; ++l2) {
            auto table = dual_nu_table(a, elem(l1), elem(l2));
            dedup.insert(detail::apply_table_to_set(table, c.points));
        }
    std::vector<ModelCurve> out;
    for (const auto& pts : dedup) out.push_back(classify_graph2(a, pts));
    return out;
}

inline std::vector<ModelCurve> orbit_T(const KAlgebra& a, const ModelCurve& c) {
    if (!is_dual_algebra(a)) throw error("orbit_T is a dual-model operation");
    const Ring& R = a.R();
    std::set<std::vector<elem>> dedup;
    for (int t = 0; t < R.n; ++t) {
        std::vector<elem> moved;
        for (elem z : c.points) moved.push_back(R.add(z, elem(t)));
        std::sort(moved.begin(), moved.end());
        dedup.insert(std::move(moved));
    }
    std::vector<ModelCurve> out;
    for (const auto& pts : dedup) out.push_back(classify_graph2(a, pts));
    return out;
}

/// True when the translate family of the standard parabola equals its
/// N-orbit; the translate family is verified to embed into the orbit first.
inline bool compare_orbits(const KAlgebra& a, elem t) {
    if (t == a.K().zero) throw error("t must be nonzero");
    ModelCurve c = standard_parabola(a, t);
    auto tn = orbit_T(a, c);
    auto nn = orbit_N(a, c);
    std::set<std::vector<elem>> nset;
    for (const auto& m : nn) nset.insert(m.points);
    for (const auto& m : tn)
        if (!nset.count(m.points))
            throw error("translate family escapes the orbit family");  // impossible
    return tn.size() == nn.size();
}

/// Nonunits of the ring, as a sorted element list.
inline std::vector<elem> cone_of_singularity(const Ring& r) {
    std::vector<elem> out;
    for (int x = 0; x < r.n; ++x)
        if (!r.unit[x]) out.push_back(elem(x));
    return out;
}

// ---------------------------------------------------------------------------
// The worked ternion model.

struct TernionReport {
    bool formula_agrees = false;        // coordinate form == generic induced map
    bool vertical_lines_invariant = false;
    bool cone_fixed_pointwise = false;
    bool shear_on_z1_planes = false;
    bool shear_on_z2_planes = false;
    bool plane_maps_to_paraboloid = false;
    bool regular_images_are_parabolas_on_surface = false;
    bool ruling_images_are_lines_on_surface = false;
    int parabola_family_size = 0;  // distinct images of regular lines of the base plane
    int ruling_family_size = 0;    // distinct line images from the plane's non-regular lines
    bool v_members_are_parabolas = false;
    bool v_and_orbit_mutual_translates = false;
    bool v_translate_matches_char = false;

    bool ok() const {
        return formula_agrees && vertical_lines_invariant && cone_fixed_pointwise &&
               shear_on_z1_planes && shear_on_z2_planes && plane_maps_to_paraboloid &&
               regular_images_are_parabolas_on_surface && ruling_images_are_lines_on_surface &&
               v_members_are_parabolas && v_and_orbit_mutual_translates &&
               v_translate_matches_char;
    }
};

namespace detail {

inline bool is_translate_of(const Ring& R, const std::vector<elem>& s1,
                            const std::vector<elem>& s2) {
    if (s1.size() != s2.size()) return false;
    for (int c = 0; c < R.n; ++c) {
        std::vector<elem> moved;
        moved.reserve(s2.size());
        for (elem z : s2) moved.push_back(R.add(z, elem(c)));
        std::sort(moved.begin(), moved.end());
        if (moved == s1) return true;
    }
    return false;
}

}  // namespace detail

inline TernionReport ternion_classify(const KAlgebra& a, elem t) {
    if (!is_ternion_algebra(a)) throw error("ternion_classify requires a ternion algebra");
    if (t == a.K().zero) throw error("t must be nonzero");
    const Ring& R = a.R();
    const Ring& K = a.K();
    const int q = K.n;
    TernionReport rep;

    // ground truth: the generic induced transform of the B-matrix of t*e
    elem b = a.smul(t, a.basis[2]);
    TransformDescriptor gen = induced_transform(a, beta_matrix(a, b));
    if (!gen.total()) throw error("the quadratic map must be total");
    auto coords_table = ternion_beta_table(a, t);
    rep.formula_agrees = std::equal(gen.image.begin(), gen.image.end(), coords_table.begin());
    const auto& f = gen.image;

    auto at = [&](elem z1, elem z2, elem z3) { return a.from_coords(std::vector<elem>{z1, z2, z3}); };

    rep.vertical_lines_invariant = true;
    for (const auto& line : affine_lines(a))
        if (is_vertical_line(a, line)) {
            auto img = detail::apply_table_to_set(f, line);
            std::vector<elem> sorted = line;
            std::sort(sorted.begin(), sorted.end());
            if (img != sorted) rep.vertical_lines_invariant = false;
        }

    rep.cone_fixed_pointwise = true;
    for (elem z : cone_of_singularity(R))
        if (f[z] != z) rep.cone_fixed_pointwise = false;

    // restriction to z1 = c: (z2, z3) -> (z2, z3 + (t c) z2), a shear fixing
    // the intersection with the cone pointwise; symmetric for z2 = d.
    rep.shear_on_z1_planes = true;
    for (int c = 0; c < q && rep.shear_on_z1_planes; ++c)
        for (int z2 = 0; z2 < q; ++z2)
            for (int z3 = 0; z3 < q; ++z3) {
                elem s = K.mul(t, K.mul(elem(c), elem(z2)));
                if (f[at(elem(c), elem(z2), elem(z3))] !=
                    at(elem(c), elem(z2), K.add(elem(z3), s)))
                    rep.shear_on_z1_planes = false;
            }
    rep.shear_on_z2_planes = true;
    for (int d = 0; d < q && rep.shear_on_z2_planes; ++d)
        for (int z1 = 0; z1 < q; ++z1)
            for (int z3 = 0; z3 < q; ++z3) {
                elem s = K.mul(t, K.mul(elem(z1), elem(d)));
                if (f[at(elem(z1), elem(d), elem(z3))] !=
                    at(elem(z1), elem(d), K.add(elem(z3), s)))
                    rep.shear_on_z2_planes = false;
            }

    // the base plane z3 = 0 maps onto the saddle set {z3 = t z1 z2}
    std::vector<elem> base_plane, saddle;
    for (int z1 = 0; z1 < q; ++z1)
        for (int z2 = 0; z2 < q; ++z2) {
            base_plane.push_back(at(elem(z1), elem(z2), K.zero));
            saddle.push_back(at(elem(z1), elem(z2), K.mul(t, K.mul(elem(z1), elem(z2)))));
        }
    auto plane_img = detail::apply_table_to_set(f, base_plane);
    std::sort(saddle.begin(), saddle.end());
    rep.plane_maps_to_paraboloid = (plane_img == saddle);
    std::vector<char> on_saddle(R.n, 0);
    for (elem z : saddle) on_saddle[z] = 1;

    // images of the base plane's lines: regular ones become parabolas on the
    // saddle, ruling-direction ones stay lines on the saddle
    std::set<std::vector<elem>> parabola_family, ruling_family;
    rep.regular_images_are_parabolas_on_surface = true;
    rep.ruling_images_are_lines_on_surface = true;
    for (const auto& line : affine_lines(a)) {
        bool in_plane = std::all_of(line.begin(), line.end(),
                                    [&](elem z) { return a.coords(z)[2] == K.zero; });
        if (!in_plane) continue;
        ModelCurve img = image_of_line(a, f, line);
        bool on_surface = std::all_of(img.points.begin(), img.points.end(),
                                      [&](elem z) { return on_saddle[z]; });
        if (is_regular_line(a, line)) {
            if (img.kind != CurveKind::parabola || !on_surface)
                rep.regular_images_are_parabolas_on_surface = false;
            parabola_family.insert(img.points);
        } else {
            if (img.kind != CurveKind::line || !on_surface)
                rep.ruling_images_are_lines_on_surface = false;
            ruling_family.insert(img.points);
        }
    }
    rep.parabola_family_size = int(parabola_family.size());
    rep.ruling_family_size = int(ruling_family.size());

    // translate family of the vertical plane through the diagonal, cut with
    // the saddle, against the N-orbit of the diagonal's image
    std::vector<elem> diagonal;
    for (int k = 0; k < q; ++k) diagonal.push_back(at(elem(k), elem(k), K.zero));
    ModelCurve cpar = image_of_line(a, f, diagonal);

    std::set<std::vector<elem>> v_family;
    for (int c = 0; c < R.n; ++c) {
        std::vector<elem> cut;
        for (int k = 0; k < q; ++k)
            for (int z3 = 0; z3 < q; ++z3) {
                elem moved = R.add(at(elem(k), elem(k), elem(z3)), elem(c));
                if (on_saddle[moved]) cut.push_back(moved);
            }
        std::sort(cut.begin(), cut.end());
        cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
        if (!cut.empty()) v_family.insert(std::move(cut));
    }

    rep.v_members_are_parabolas = true;
    for (const auto& member : v_family) {
        if (int(member.size()) != q) {
            rep.v_members_are_parabolas = false;
            continue;
        }
        // each member must be a quadratic parametric curve
        try {
            // parameterize by z1, which is distinct on a saddle cut of this kind
            std::vector<elem> xs, y2, y3;
            for (elem z : member) {
                auto co = a.coords(z);
                xs.push_back(co[0]);
                y2.push_back(co[1]);
                y3.push_back(co[2]);
            }
            std::vector<elem> sx = xs;
            std::sort(sx.begin(), sx.end());
            if (std::adjacent_find(sx.begin(), sx.end()) != sx.end()) {
                rep.v_members_are_parabolas = false;
                continue;
            }
            auto p2 = detail::interpolate(K, xs, y2);
            auto p3 = detail::interpolate(K, xs, y3);
            std::size_t d2 = p2.empty() ? 0 : p2.size() - 1;
            std::size_t d3 = p3.empty() ? 0 : p3.size() - 1;
            if (std::max(d2, d3) != 2) rep.v_members_are_parabolas = false;
        } catch (const error&) {
            rep.v_members_are_parabolas = false;
        }
    }

    std::set<std::vector<elem>> orbit_family;
    for (elem n1 : a.nn)
        for (elem n2 : a.nn) {
            TransformDescriptor nu = induced_transform(a, nu_matrix(a, n1, n2));
            orbit_family.insert(detail::apply_table_to_set(nu.image, cpar.points));
        }

    rep.v_and_orbit_mutual_translates = true;
    for (const auto& m : v_family) {
        bool found = false;
        for (const auto& o : orbit_family) found |= detail::is_translate_of(R, m, o);
        if (!found) rep.v_and_orbit_mutual_translates = false;
    }
    for (const auto& o : orbit_family) {
        bool found = false;
        for (const auto& m : v_family) found |= detail::is_translate_of(R, o, m);
        if (!found) rep.v_and_orbit_mutual_translates = false;
    }

    int translates_of_c = 0;
    for (const auto& m : v_family)
        if (detail::is_translate_of(R, m, cpar.points)) ++translates_of_c;
    if (a.field_char == 2)
        rep.v_translate_matches_char = (translates_of_c == 1);  // only the curve itself
    else
        rep.v_translate_matches_char = (translates_of_c == int(v_family.size()));

    return rep;
}

// ---------------------------------------------------------------------------
// Model line sets: the new line family after transport along the quadratic map.

enum class LineTag { vertical, translate_of_c, n_orbit_member, non_regular_image };

inline const char* to_string(LineTag t) {
    switch (t) {
        case LineTag::vertical: return "vertical";
        case LineTag::translate_of_c: return "translate-of-C";
        case LineTag::n_orbit_member: return "N-orbit-member";
        case LineTag::non_regular_image: return "non-regular-image";
    }
    return "?";
}

struct ModelLine {
    std::vector<elem> points;
    LineTag tag;
};

struct ModelLineSet {
    std::string algebra;
    std::string field;
    elem t = 0;
    std::vector<ModelLine> lines;
};

inline ModelLineSet model_line_set(const KAlgebra& a, elem t) {
    const Ring& R = a.R();
    const Ring& K = a.K();
    if (K.n == 2) throw error("the two-element field is excluded from the parabola models");
    K.require(t);
    if (t == K.zero) throw error("t must be nonzero");

    ModelLineSet out{R.name, K.name, t, {}};
    std::set<std::vector<elem>> image_family;
    std::vector<elem> table;

    if (is_dual_algebra(a)) {
        table = induced_transform(a, beta_matrix(a, a.smul(t, a.basis[1]))).image;
        for (const auto& line : affine_lines(a)) {
            auto img = detail::apply_table_to_set(table, line);
            image_family.insert(img);
        }
        // construction: vertical lines plus the parabola family
        for (const auto& line : affine_lines(a))
            if (is_vertical_line(a, line)) {
                std::vector<elem> sorted = line;
                std::sort(sorted.begin(), sorted.end());
                out.lines.push_back({sorted, LineTag::vertical});
            }
        ModelCurve c = standard_parabola(a, t);
        if (a.field_char != 2) {
            for (const auto& m : orbit_T(a, c))
                out.lines.push_back({m.points, LineTag::translate_of_c});
        } else {
            for (const auto& m : orbit_N(a, c))
                out.lines.push_back({m.points, LineTag::n_orbit_member});
        }
    } else if (is_ternion_algebra(a)) {
        table = induced_transform(a, beta_matrix(a, a.smul(t, a.basis[2]))).image;
        // the parabola family on the saddle: images of the base plane's
        // regular lines
        std::set<std::vector<elem>> ch;
        for (const auto& line : affine_lines(a)) {
            bool in_plane = std::all_of(line.begin(), line.end(),
                                        [&](elem z) { return a.coords(z)[2] == K.zero; });
            if (in_plane && is_regular_line(a, line))
                ch.insert(detail::apply_table_to_set(table, line));
        }
        for (const auto& line : affine_lines(a)) {
            auto img = detail::apply_table_to_set(table, line);
            image_family.insert(img);
            if (is_vertical_line(a, line)) {
                out.lines.push_back({img, LineTag::vertical});
            } else if (!is_regular_line(a, line)) {
                out.lines.push_back({img, LineTag::non_regular_image});
            } else {
                bool translate = false;
                for (const auto& p : ch) translate |= detail::is_translate_of(R, img, p);
                if (!translate) throw error("regular image is not a translate of the parabola family");
                out.lines.push_back({img, LineTag::translate_of_c});
            }
        }
    } else {
        throw error("model line sets exist for the dual-number and ternion algebras");
    }

    std::set<std::vector<elem>> constructed;
    for (const auto& l : out.lines) constructed.insert(l.points);
    if (constructed != image_family)
        throw error("constructed line family differs from the image of the affine lines");
    std::sort(out.lines.begin(), out.lines.end(),
              [](const ModelLine& x, const ModelLine& y) { return x.points < y.points; });
    return out;
}

// ---------------------------------------------------------------------------
// Real-valued figure sampling (visualization only; all verification above is
// exact over finite fields).

struct FigureRange {
    double lo = 0, hi = 0, step = 0;
};

inline FigureRange parse_range(const std::string& s) {
    auto c1 = s.find(':');
    auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw parse_error("range must have the form a:b:step");
    FigureRange r;
    try {
        r.lo = std::stod(s.substr(0, c1));
        r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stod(s.substr(c2 + 1));
    } catch (const std::exception&) {
        throw parse_error("range must have the form a:b:step");
    }
    if (!(r.step > 0)) throw parse_error("range step must be positive");
    return r;
}

/// CSV sampling of the model curves: `curve_id,param,x,y` for the planar
/// model, `curve_id,param,x,y,z` for the spatial one.
inline void export_figure_data(std::ostream& os, const std::string& example, double t,
                               const FigureRange& range) {
    auto samples = [&]() {
        std::vector<double> xs;
        for (double x = range.lo; x <= range.hi + 1e-9; x += range.step) xs.push_back(x);
        return xs;
    }();
    if (example == "dual") {
        os << "curve_id,param,x,y\n";
        for (double x : samples) os << "C," << x << "," << x << "," << t * x * x << "\n";
        // one shear image: l1 = 1, l2 = 0
        for (double x : samples) os << "C_nu," << x << "," << x << "," << t * x * x + x << "\n";
        return;
    }
    if (example == "ternion") {
        os << "curve_id,param,x,y,z\n";
        long long i = 0;
        for (double x : samples)
            for (double y : samples) {
                os << "P," << i << "," << x << "," << y << ",0\n";
                os << "H," << i << "," << x << "," << y << "," << t * x * y << "\n";
                ++i;
            }
        long long j = 0;
        for (double y : samples)
            for (double z : samples) {
                os << "cone_j2," << j << ",0," << y << "," << z << "\n";
                os << "cone_j1," << j << "," << y << ",0," << z << "\n";
                ++j;
            }
        return;
    }
    throw error("unknown example '" + example + "' (expected dual or ternion)");
}

}  // namespace ringline
