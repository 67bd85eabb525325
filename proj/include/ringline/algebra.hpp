#pragma once

// K-algebra structure on a finite ring and the induced transformations of
// its affine part.
//
// Fixing the point (1,0) =: inf of the projective line, iota: z -> (z,1) is
// a bijection of R onto the neighbourhood of inf. An invertible matrix g
// then induces a partial map g' of R, defined on the elements whose image
// point stays distant from inf. The map is stored as an explicit table, so
// downstream code consumes it as data regardless of which formula produced
// it. Three matrix groups act on this picture:
//
//   B   unitriangular matrices with radical upper entry; b' is the map
//       z -> (1 - z b)^{-1} z, which also has a polynomial form
//   T   lower unitriangular matrices; t' is the translation z -> z + c
//   N   matrices built from ann(rad) ∩ rad; n' is affine and fixes the
//       parallel class of inf pointwise

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ringline/catalog.hpp"
#include "ringline/parallelism.hpp"
#include "ringline/projline.hpp"

namespace ringline {

inline constexpr std::uint64_t kDefaultSweepSeed = 0x52494E474C494E45ull;  // "RINGLINE"

struct KAlgebra {
    RingPtr ring;
    RingPtr field;
    std::vector<elem> embed;  // field index -> ring index, central unital embedding
    std::vector<elem> basis;  // K-basis of R
    int dim = 0;              // m
    int nil_exp = 0;          // least e with y^e = 0 on the radical
    int field_char = 0;

    std::vector<elem> coord;       // flattened [z*dim + i]
    std::vector<elem> from_tuple;  // mixed-radix tuple index -> element

    Ideal rad;
    std::vector<elem> ann_rad;
    std::vector<elem> nn;  // ann(rad) ∩ rad

    std::shared_ptr<const ProjectiveLine> line;
    DistantGraph graph;
    int inf = 0;                  // point of (1,0)
    std::vector<int> iota_point;  // z -> point index of (z,1)
    std::vector<int> point_to_z;  // point index -> z, or -1 outside the iota image

    const Ring& R() const { return *ring; }
    const Ring& K() const { return *field; }

    elem scalar(elem k) const {
        field->require(k);
        return embed[k];
    }
    elem smul(elem k, elem z) const { return R().mul(scalar(k), z); }

    std::span<const elem> coords(elem z) const {
        R().require(z);
        return {coord.data() + std::size_t(z) * dim, std::size_t(dim)};
    }

    elem from_coords(std::span<const elem> ks) const {
        if (int(ks.size()) != dim) throw error("coordinate vector has the wrong length");
        std::size_t t = 0;
        for (int i = dim - 1; i >= 0; --i) {
            K().require(ks[i]);
            t = t * K().n + ks[i];
        }
        return from_tuple[t];
    }
};

using AlgebraPtr = std::shared_ptr<const KAlgebra>;

inline AlgebraPtr make_algebra(RingPtr ring, RingPtr field, std::vector<elem> embed,
                               std::vector<elem> basis) {
    auto a = std::make_shared<KAlgebra>();
    a->ring = std::move(ring);
    a->field = std::move(field);
    a->embed = std::move(embed);
    a->basis = std::move(basis);
    const Ring& R = *a->ring;
    const Ring& K = *a->field;

    if (!is_field(K)) throw error("the scalar ring must be a field");
    if (K.n >= R.n) throw error("K must be a proper subfield of R (K = R is excluded)");
    if (int(a->embed.size()) != K.n) throw error("embedding table has the wrong size");
    for (elem x : a->embed) R.require(x);
    if (a->embed[K.zero] != R.zero || a->embed[K.one] != R.one)
        throw error("embedding must be unital");
    for (int x = 0; x < K.n; ++x)
        for (int y = 0; y < K.n; ++y) {
            if (a->embed[K.add(elem(x), elem(y))] != R.add(a->embed[x], a->embed[y]) ||
                a->embed[K.mul(elem(x), elem(y))] != R.mul(a->embed[x], a->embed[y]))
                throw error("embedding is not a ring homomorphism");
            if (x != y && a->embed[x] == a->embed[y]) throw error("embedding is not injective");
        }
    for (int k = 0; k < K.n; ++k)
        for (int r = 0; r < R.n; ++r)
            if (R.mul(a->embed[k], elem(r)) != R.mul(elem(r), a->embed[k]))
                throw error("embedded field is not central in " + R.name);

    a->dim = int(a->basis.size());
    if (a->dim < 1) throw error("basis must be non-empty");
    for (elem b : a->basis) R.require(b);
    long long span_size = 1;
    for (int i = 0; i < a->dim; ++i) {
        span_size *= K.n;
        if (span_size > R.n) throw error("basis is too large to be free");
    }
    if (span_size != R.n) throw error("basis does not span: |K|^m differs from |R|");

    a->coord.assign(std::size_t(R.n) * a->dim, 0);
    a->from_tuple.assign(R.n, 0);
    std::vector<char> hit(R.n, 0);
    std::vector<elem> tuple(a->dim, K.zero);
    for (std::size_t t = 0;; ++t) {
        elem z = R.zero;
        for (int i = 0; i < a->dim; ++i) z = R.add(z, R.mul(a->embed[tuple[i]], a->basis[i]));
        if (hit[z]) throw error("basis is not free over K");
        hit[z] = 1;
        a->from_tuple[t] = z;
        for (int i = 0; i < a->dim; ++i) a->coord[std::size_t(z) * a->dim + i] = tuple[i];
        int carry = 0;
        while (carry < a->dim) {
            tuple[carry] = elem((tuple[carry] + 1) % K.n);
            if (tuple[carry] != K.zero) break;
            ++carry;
        }
        if (carry == a->dim) break;
    }

    a->field_char = 1;
    for (elem s = K.one; s != K.zero; s = K.add(s, K.one)) {
        ++a->field_char;
        if (a->field_char > K.n + 1) throw error("field has no additive order");
    }

    a->nil_exp = nil_exponent(R);
    a->rad = jacobson_radical(R);
    a->ann_rad = annihilator(R, a->rad.members);
    for (elem x : a->ann_rad)
        if (a->rad.contains(x)) a->nn.push_back(x);

    a->line = std::make_shared<const ProjectiveLine>(enumerate_points(a->ring));
    a->graph = distant_graph(*a->line);
    a->inf = point_of(*a->line, R.one, R.zero);
    a->iota_point.resize(R.n);
    a->point_to_z.assign(a->line->size(), -1);
    for (int z = 0; z < R.n; ++z) {
        a->iota_point[z] = point_of(*a->line, elem(z), R.one);
        a->point_to_z[a->iota_point[z]] = z;
    }
    return a;
}

/// Builds the algebra an annotated catalog ring carries, given its field.
inline AlgebraPtr algebra_from_scalars(const RingPtr& ring, const RingPtr& field) {
    if (!ring->scalars) throw error(ring->name + " carries no recorded scalar structure");
    if (field->name != ring->scalars->field)
        throw error("scalar field of " + ring->name + " is " + ring->scalars->field + ", not " +
                    field->name);
    return make_algebra(ring, field, ring->scalars->embed, ring->scalars->basis);
}

/// Parses "ring@field", e.g. "dual(gf(3))@gf(3)"; the field part may be
/// omitted for catalog rings that record their scalar structure.
inline AlgebraPtr parse_algebra(const std::string& descriptor,
                                int max_size = kDefaultMaxRingSize) {
    auto at = descriptor.find('@');
    RingPtr ring = parse_ring(descriptor.substr(0, at), max_size);
    if (!ring->scalars)
        throw error(ring->name + " carries no scalar structure; no algebra is defined on it");
    RingPtr field = parse_ring(
        at == std::string::npos ? ring->scalars->field : descriptor.substr(at + 1), max_size);
    return algebra_from_scalars(ring, field);
}

inline std::string algebra_descriptor(const KAlgebra& a) {
    return a.R().name + "@" + a.K().name;
}

inline int iota(const KAlgebra& a, elem z) {
    a.R().require(z);
    return a.iota_point[z];
}

/// iota-preimage of the part of the point set that lies in the
/// neighbourhood of inf.
inline std::vector<elem> affine_trace(const KAlgebra& a, std::span<const int> point_set) {
    std::vector<char> in_set(a.line->size(), 0);
    for (int p : point_set) in_set[p] = 1;
    std::vector<elem> out;
    for (int z = 0; z < a.R().n; ++z)
        if (in_set[a.iota_point[z]]) out.push_back(elem(z));
    return out;
}

/// All sets K*u + v with u a unit, deduplicated; sorted for determinism.
inline std::vector<std::vector<elem>> regular_lines(const KAlgebra& a) {
    const Ring& R = a.R();
    std::vector<std::vector<elem>> all;
    for (elem u : R.unit_list)
        for (int v = 0; v < R.n; ++v) {
            std::vector<elem> pts;
            pts.reserve(a.K().n);
            for (int k = 0; k < a.K().n; ++k) pts.push_back(R.add(a.smul(elem(k), u), elem(v)));
            std::sort(pts.begin(), pts.end());
            all.push_back(std::move(pts));
        }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

struct TransformDescriptor {
    Matrix2 matrix;
    std::vector<bool> in_domain;
    std::vector<elem> domain;  // sorted
    std::vector<elem> image;   // image[z] meaningful when in_domain[z]

    bool total() const { return int(domain.size()) == int(in_domain.size()); }
};

/// The partial map induced on R by an invertible matrix, as a table.
inline TransformDescriptor induced_transform(const KAlgebra& a, const Matrix2& m) {
    if (m.ring != a.ring.get()) throw foreign_element("matrix over a different ring");
    if (!is_invertible(m)) throw not_invertible("matrix is not invertible over " + m.ring->name);
    const int n = a.R().n;
    TransformDescriptor t{m, std::vector<bool>(n, false), {}, std::vector<elem>(n, 0)};
    for (int z = 0; z < n; ++z) {
        int q = apply_matrix_unchecked(*a.line, a.iota_point[z], m);
        if (a.graph.distant(q, a.inf)) {
            t.in_domain[z] = true;
            t.domain.push_back(elem(z));
            t.image[z] = elem(a.point_to_z[q]);
        }
    }
    return t;
}

inline std::vector<elem> gamma_domain(const KAlgebra& a, const Matrix2& m) {
    return induced_transform(a, m).domain;
}

inline elem gamma_apply(const KAlgebra& a, const Matrix2& m, elem z) {
    if (m.ring != a.ring.get()) throw foreign_element("matrix over a different ring");
    if (!is_invertible(m)) throw not_invertible("matrix is not invertible over " + m.ring->name);
    a.R().require(z);
    int q = apply_matrix_unchecked(*a.line, a.iota_point[z], m);
    if (!a.graph.distant(q, a.inf))
        throw outside_domain(a.R().names[z] + " lies outside the domain of the induced map");
    return elem(a.point_to_z[q]);
}

/// Entry criterion for a total induced map: diagonal units, radical upper
/// right entry.
inline bool satisfies_total_condition(const KAlgebra& a, const Matrix2& m) {
    if (m.ring != a.ring.get()) throw foreign_element("matrix over a different ring");
    return a.R().unit[m.a] && a.R().unit[m.d] && a.rad.contains(m.b);
}

/// A total selfmap is affine when z -> f(z) - f(0) is additive and
/// K-homogeneous; both are checked exhaustively.
inline bool is_affine_map(const KAlgebra& a, std::span<const elem> table) {
    const Ring& R = a.R();
    if (int(table.size()) != R.n) throw error("affineness test requires a total map");
    elem f0 = table[R.zero];
    auto lin = [&](elem z) { return R.sub(table[z], f0); };
    for (int x = 0; x < R.n; ++x)
        for (int y = 0; y < R.n; ++y)
            if (lin(R.add(elem(x), elem(y))) != R.add(lin(elem(x)), lin(elem(y)))) return false;
    for (int k = 0; k < a.K().n; ++k)
        for (int x = 0; x < R.n; ++x)
            if (lin(a.smul(elem(k), elem(x))) != a.R().mul(a.scalar(elem(k)), lin(elem(x))))
                return false;
    return true;
}

/// Fraction-free form (1 + zb + ... + (zb)^s) z with s+1 the nil exponent.
inline elem beta_polynomial(const KAlgebra& a, elem b, elem z) {
    const Ring& R = a.R();
    R.require(b);
    R.require(z);
    if (!a.rad.contains(b)) throw error(R.names[b] + " does not lie in the radical");
    const int s = a.nil_exp - 1;
    elem zb = R.mul(z, b);
    elem acc = R.one, term = R.one;
    for (int i = 1; i <= s; ++i) {
        term = R.mul(term, zb);
        acc = R.add(acc, term);
    }
    return R.mul(acc, z);
}

inline Matrix2 beta_matrix(const KAlgebra& a, elem b) {
    const Ring& R = a.R();
    R.require(b);
    if (!a.rad.contains(b)) throw error(R.names[b] + " does not lie in the radical");
    return {&R, R.one, R.neg[b], R.zero, R.one};
}

inline Matrix2 tau_matrix(const KAlgebra& a, elem c) {
    const Ring& R = a.R();
    R.require(c);
    return {&R, R.one, R.zero, c, R.one};
}

inline Matrix2 nu_matrix(const KAlgebra& a, elem n1, elem n2) {
    const Ring& R = a.R();
    bool ok1 = false, ok2 = false;
    for (elem x : a.nn) {
        ok1 |= (x == n1);
        ok2 |= (x == n2);
    }
    if (!ok1 || !ok2) throw error("N requires entries from ann(rad) ∩ rad");
    return {&R, R.add(R.one, n1), R.zero, n2, R.one};
}

enum class GroupLabel { B, T, N };

struct MatrixGroup {
    GroupLabel label;
    std::vector<Matrix2> members;
};

inline MatrixGroup group_B(const KAlgebra& a) {
    MatrixGroup g{GroupLabel::B, {}};
    for (elem b : a.rad.members) g.members.push_back(beta_matrix(a, b));
    return g;
}

inline MatrixGroup group_T(const KAlgebra& a) {
    MatrixGroup g{GroupLabel::T, {}};
    for (int c = 0; c < a.R().n; ++c) g.members.push_back(tau_matrix(a, elem(c)));
    return g;
}

inline MatrixGroup group_N(const KAlgebra& a) {
    MatrixGroup g{GroupLabel::N, {}};
    for (elem n1 : a.nn)
        for (elem n2 : a.nn) g.members.push_back(nu_matrix(a, n1, n2));
    return g;
}

inline bool is_b_matrix(const KAlgebra& a, const Matrix2& m) {
    return m.ring == a.ring.get() && m.a == a.R().one && m.c == a.R().zero &&
           m.d == a.R().one && a.rad.contains(m.b);
}

inline bool is_t_matrix(const KAlgebra& a, const Matrix2& m) {
    return m.ring == a.ring.get() && m.a == a.R().one && m.b == a.R().zero && m.d == a.R().one;
}

inline bool is_n_matrix(const KAlgebra& a, const Matrix2& m) {
    if (m.ring != a.ring.get() || m.b != a.R().zero || m.d != a.R().one) return false;
    elem n1 = a.R().sub(m.a, a.R().one);
    bool ok1 = false, ok2 = false;
    for (elem x : a.nn) {
        ok1 |= (x == n1);
        ok2 |= (x == m.c);
    }
    return ok1 && ok2;
}

/// The translation matrix of c fixes the point of (1,b) iff b*c*b = 0.
inline bool tau_fixes(const KAlgebra& a, elem c, elem b) {
    const Ring& R = a.R();
    R.require(c);
    R.require(b);
    if (!a.rad.contains(b)) throw error(R.names[b] + " does not lie in the radical");
    return R.mul(R.mul(b, c), b) == R.zero;
}

inline bool commutes(const KAlgebra& a, const Matrix2& nu, const Matrix2& beta) {
    if (!is_n_matrix(a, nu)) throw error("first argument is not a member of N");
    if (!is_b_matrix(a, beta)) throw error("second argument is not a member of B");
    return mat_eq(mat_mul(nu, beta), mat_mul(beta, nu));
}

// ---------------------------------------------------------------------------
// Theorem sweep over the matrix space: exhaustive up to a size cap, otherwise
// the B, T, N members plus pseudo-random samples from a fixed seed.

struct TrafoSweep {
    long long matrices = 0;
    long long total_matrices = 0;
    bool exhaustive = false;
    bool criterion_ok = true;      // (invertible and everywhere-defined) <=> entry criterion
    bool factorization_ok = true;  // diag * unitriangular * lower product rebuilds the matrix
    bool bijective_ok = true;      // total induced maps are bijections
    bool affine_iff_b0_ok = true;  // checked when |K| > 2
    int affine_with_nonzero_b = 0;     // informational when |K| = 2
    int nonaffine_with_nonzero_b = 0;  // informational when |K| = 2
    std::string witness;
};

namespace detail {

inline std::string mat_desc(const Matrix2& m) {
    const Ring& r = *m.ring;
    return "[" + r.names[m.a] + "," + r.names[m.b] + ";" + r.names[m.c] + "," + r.names[m.d] + "]";
}

inline void sweep_one(const KAlgebra& a, const Matrix2& m, TrafoSweep& out) {
    const Ring& R = a.R();
    ++out.matrices;
    bool inv = is_invertible(m);
    bool cond = satisfies_total_condition(a, m);
    bool lhs = false;
    TransformDescriptor t;
    if (inv) {
        t = induced_transform(a, m);
        lhs = t.total();
    }
    if (lhs != cond) {
        out.criterion_ok = false;
        if (out.witness.empty())
            out.witness = "totality criterion fails at " + mat_desc(m);
        return;
    }
    if (!cond) return;
    ++out.total_matrices;

    // a - b d^{-1} c must be a unit, and the three-factor product must
    // rebuild the matrix.
    elem dinv = R.inverse(m.d);
    elem schur = R.sub(m.a, R.mul(R.mul(m.b, dinv), m.c));
    Matrix2 f1{&R, R.neg[R.one], R.zero, R.zero, m.d};
    Matrix2 f2{&R, R.one, R.neg[m.b], R.zero, R.one};
    Matrix2 f3{&R, R.sub(R.mul(R.mul(m.b, dinv), m.c), m.a), R.zero, R.mul(dinv, m.c), R.one};
    if (!R.unit[schur] || !mat_eq(mat_mul(mat_mul(f1, f2), f3), m)) {
        out.factorization_ok = false;
        if (out.witness.empty()) out.witness = "factorization fails at " + mat_desc(m);
    }

    std::vector<char> seen(R.n, 0);
    bool bij = true;
    for (int z = 0; z < R.n; ++z) {
        if (seen[t.image[z]]) {
            bij = false;
            break;
        }
        seen[t.image[z]] = 1;
    }
    if (!bij) {
        out.bijective_ok = false;
        if (out.witness.empty()) out.witness = "total map is not a bijection at " + mat_desc(m);
    }

    bool affine = is_affine_map(a, t.image);
    if (a.K().n > 2) {
        if (affine != (m.b == R.zero)) {
            out.affine_iff_b0_ok = false;
            if (out.witness.empty())
                out.witness = std::string("affine/non-affine classification fails at ") + mat_desc(m);
        }
    } else {
        if (m.b != R.zero) (affine ? out.affine_with_nonzero_b : out.nonaffine_with_nonzero_b)++;
        if (m.b == R.zero && !affine) {
            out.affine_iff_b0_ok = false;
            if (out.witness.empty()) out.witness = "map with zero upper entry is not affine at " + mat_desc(m);
        }
    }
}

}  // namespace detail

inline TrafoSweep trafo_theorem_sweep(const KAlgebra& a, int exhaustive_cap = 9,
                                      int samples = 10000,
                                      std::uint64_t seed = kDefaultSweepSeed) {
    const Ring& R = a.R();
    TrafoSweep out;
    if (R.n <= exhaustive_cap) {
        out.exhaustive = true;
        for (int x1 = 0; x1 < R.n; ++x1)
            for (int x2 = 0; x2 < R.n; ++x2)
                for (int x3 = 0; x3 < R.n; ++x3)
                    for (int x4 = 0; x4 < R.n; ++x4)
                        detail::sweep_one(
                            a, {&R, elem(x1), elem(x2), elem(x3), elem(x4)}, out);
        return out;
    }
    for (const auto& g : {group_B(a), group_T(a), group_N(a)})
        for (const Matrix2& m : g.members) detail::sweep_one(a, m, out);
    // Deterministic sampling: raw engine output reduced mod |R|. The tiny
    // modulo bias is irrelevant here, cross-platform reproducibility is not.
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Matrix2 m{&R, elem(rng() % R.n), elem(rng() % R.n), elem(rng() % R.n), elem(rng() % R.n)};
        detail::sweep_one(a, m, out);
    }
    return out;
}

}  // namespace ringline
