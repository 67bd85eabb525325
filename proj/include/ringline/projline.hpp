#pragma once

// The projective line over a finite ring.
//
// Points are unit orbits of admissible pairs (a,b), canonicalized as the
// lexicographically least orbit member. Two points are distant when the
// matrix stacking their representatives is invertible; invertibility of a
// 2x2 matrix over a (possibly noncommutative) finite ring is decided by
// bijectivity of the induced map on row vectors, which costs |R|^2 but
// needs no determinant.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

struct Matrix2 {
    const Ring* ring = nullptr;
    elem a = 0, b = 0, c = 0, d = 0;
};

inline Matrix2 mat(const Ring& r, elem a, elem b, elem c, elem d) {
    r.require(a);
    r.require(b);
    r.require(c);
    r.require(d);
    return {&r, a, b, c, d};
}

inline Matrix2 mat(const Ring& r, const std::string& a, const std::string& b,
                   const std::string& c, const std::string& d) {
    return {&r, r.by_name(a), r.by_name(b), r.by_name(c), r.by_name(d)};
}

inline Matrix2 identity_matrix(const Ring& r) { return {&r, r.one, r.zero, r.zero, r.one}; }

inline Matrix2 mat_mul(const Matrix2& x, const Matrix2& y) {
    if (x.ring != y.ring) throw foreign_element("matrices over different rings");
    const Ring& r = *x.ring;
    return {x.ring,
            r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
            r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

inline bool mat_eq(const Matrix2& x, const Matrix2& y) {
    if (x.ring != y.ring) throw foreign_element("matrices over different rings");
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

/// Invertible iff (x,y) -> (x,y)*M is injective on R^2 (finite, so bijective).
inline bool is_invertible(const Matrix2& m) {
    const Ring& r = *m.ring;
    const int n = r.n;
    thread_local std::vector<std::uint32_t> seen;
    thread_local std::uint32_t stamp = 0;
    if (int(seen.size()) < n * n) seen.assign(std::size_t(n) * n, 0);
    if (++stamp == 0) {
        std::fill(seen.begin(), seen.end(), 0);
        stamp = 1;
    }
    for (int x = 0; x < n; ++x) {
        elem xa = r.mul(elem(x), m.a), xb = r.mul(elem(x), m.b);
        for (int y = 0; y < n; ++y) {
            elem u = r.add(xa, r.mul(elem(y), m.c));
            elem v = r.add(xb, r.mul(elem(y), m.d));
            std::uint32_t& cell = seen[std::size_t(u) * n + v];
            if (cell == stamp) return false;
            cell = stamp;
        }
    }
    return true;
}

/// Inverse found by locating the preimages of the standard basis rows.
inline Matrix2 matrix_inverse(const Matrix2& m) {
    if (!is_invertible(m)) throw not_invertible("matrix is not invertible over " + m.ring->name);
    const Ring& r = *m.ring;
    const int n = r.n;
    Matrix2 inv{m.ring, 0, 0, 0, 0};
    bool found1 = false, found2 = false;
    for (int x = 0; x < n && !(found1 && found2); ++x) {
        elem xa = r.mul(elem(x), m.a), xb = r.mul(elem(x), m.b);
        for (int y = 0; y < n; ++y) {
            elem u = r.add(xa, r.mul(elem(y), m.c));
            elem v = r.add(xb, r.mul(elem(y), m.d));
            if (u == r.one && v == r.zero) {
                inv.a = elem(x);
                inv.b = elem(y);
                found1 = true;
            } else if (u == r.zero && v == r.one) {
                inv.c = elem(x);
                inv.d = elem(y);
                found2 = true;
            }
        }
    }
    if (!found1 || !found2) throw not_invertible("matrix is not invertible over " + r.name);
    if (!mat_eq(mat_mul(inv, m), identity_matrix(r)) ||
        !mat_eq(mat_mul(m, inv), identity_matrix(r)))
        throw error("inverse verification failed");  // unreachable over a finite ring
    return inv;
}

struct PointRep {
    elem a = 0, b = 0;
    friend auto operator<=>(const PointRep&, const PointRep&) = default;
};

struct Point {
    PointRep canonical;
    std::vector<PointRep> orbit;  // sorted
};

struct ProjectiveLine {
    RingPtr ring;
    std::vector<Point> points;
    std::vector<std::int32_t> pair_to_point;  // n*n, -1 for non-admissible pairs

    const Ring& R() const { return *ring; }
    int size() const { return int(points.size()); }

    void require_point(int p) const {
        if (p < 0 || p >= size())
            throw foreign_element("point index " + std::to_string(p) +
                                  " is not on the line over " + R().name);
    }

    int index_of(PointRep p) const {
        R().require(p.a);
        R().require(p.b);
        return pair_to_point[std::size_t(p.a) * R().n + p.b];
    }

    std::string label(int p) const {
        const PointRep& c = points[p].canonical;
        return "(" + R().names[c.a] + "," + R().names[c.b] + ")";
    }
};

/// Unimodularity: some a*a' + b*b' equals 1. Over a finite ring this is
/// equivalent to being the first row of an invertible matrix.
inline bool is_admissible(const Ring& r, elem a, elem b) {
    r.require(a);
    r.require(b);
    thread_local std::vector<std::uint32_t> hit;
    thread_local std::uint32_t stamp = 0;
    if (int(hit.size()) < r.n) hit.assign(r.n, 0);
    if (++stamp == 0) {
        std::fill(hit.begin(), hit.end(), 0);
        stamp = 1;
    }
    for (int y = 0; y < r.n; ++y) hit[r.mul(b, elem(y))] = stamp;
    for (int x = 0; x < r.n; ++x)
        if (hit[r.sub(r.one, r.mul(a, elem(x)))] == stamp) return true;
    return false;
}

/// Oracle form: search all second rows (c,d) for an invertible completion.
inline bool is_admissible_by_completion(const Ring& r, elem a, elem b) {
    for (int c = 0; c < r.n; ++c)
        for (int d = 0; d < r.n; ++d)
            if (is_invertible({&r, a, b, elem(c), elem(d)})) return true;
    return false;
}

inline ProjectiveLine enumerate_points(RingPtr ring) {
    const Ring& r = *ring;
    const int n = r.n;
    ProjectiveLine line;
    line.ring = std::move(ring);
    line.pair_to_point.assign(std::size_t(n) * n, -1);

    std::vector<char> adm(std::size_t(n) * n, 0);
    for (int b = 0; b < n; ++b) {
        std::vector<char> hit(n, 0);
        for (int y = 0; y < n; ++y) hit[r.mul(elem(b), elem(y))] = 1;
        for (int a = 0; a < n; ++a) {
            bool ok = false;
            for (int x = 0; x < n && !ok; ++x) ok = hit[r.sub(r.one, r.mul(elem(a), elem(x)))];
            adm[std::size_t(a) * n + b] = char(ok);
        }
    }

    // Lexicographic scan: the first unassigned admissible pair is the least
    // member of its orbit, hence the canonical representative.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t idx = std::size_t(a) * n + b;
            if (!adm[idx] || line.pair_to_point[idx] >= 0) continue;
            Point pt;
            pt.canonical = {elem(a), elem(b)};
            for (elem u : r.unit_list) pt.orbit.push_back({r.mul(u, elem(a)), r.mul(u, elem(b))});
            std::sort(pt.orbit.begin(), pt.orbit.end());
            pt.orbit.erase(std::unique(pt.orbit.begin(), pt.orbit.end()), pt.orbit.end());
            if (pt.orbit.front() != pt.canonical)
                throw error("orbit canonicalization failed in " + r.name);
            int pid = int(line.points.size());
            for (const PointRep& m : pt.orbit) {
                std::size_t j = std::size_t(m.a) * n + m.b;
                if (!adm[j] || line.pair_to_point[j] >= 0)
                    throw error("unit orbits do not partition the admissible pairs of " + r.name);
                line.pair_to_point[j] = pid;
            }
            line.points.push_back(std::move(pt));
        }
    return line;
}

inline int point_of(const ProjectiveLine& line, elem a, elem b) {
    int p = line.index_of({a, b});
    if (p < 0)
        throw not_admissible("(" + line.R().names[a] + "," + line.R().names[b] +
                             ") is not an admissible pair over " + line.R().name);
    return p;
}

inline Matrix2 stacked_matrix(const ProjectiveLine& line, int p, int q) {
    line.require_point(p);
    line.require_point(q);
    const PointRep& x = line.points[p].canonical;
    const PointRep& y = line.points[q].canonical;
    return {&line.R(), x.a, x.b, y.a, y.b};
}

inline bool is_distant(const ProjectiveLine& line, int p, int q) {
    return is_invertible(stacked_matrix(line, p, q));
}

inline int apply_matrix_unchecked(const ProjectiveLine& line, int p, const Matrix2& m) {
    const Ring& r = line.R();
    const PointRep& x = line.points[p].canonical;
    PointRep y{r.add(r.mul(x.a, m.a), r.mul(x.b, m.c)), r.add(r.mul(x.a, m.b), r.mul(x.b, m.d))};
    int q = line.index_of(y);
    if (q < 0) throw error("matrix action left the point set of " + r.name);
    return q;
}

inline int apply_matrix(const ProjectiveLine& line, int p, const Matrix2& m) {
    line.require_point(p);
    if (m.ring != line.ring.get()) throw foreign_element("matrix over a different ring");
    if (!is_invertible(m)) throw not_invertible("matrix is not invertible over " + m.ring->name);
    return apply_matrix_unchecked(line, p, m);
}

/// Point images under one invertible matrix (invertibility checked once).
inline std::vector<int> apply_matrix_all(const ProjectiveLine& line, const Matrix2& m) {
    if (m.ring != line.ring.get()) throw foreign_element("matrix over a different ring");
    if (!is_invertible(m)) throw not_invertible("matrix is not invertible over " + m.ring->name);
    std::vector<int> img(line.size());
    for (int p = 0; p < line.size(); ++p) img[p] = apply_matrix_unchecked(line, p, m);
    return img;
}

inline std::vector<int> neighbourhood(const ProjectiveLine& line, int p) {
    line.require_point(p);
    std::vector<int> out;
    for (int q = 0; q < line.size(); ++q)
        if (is_distant(line, q, p)) out.push_back(q);
    return out;
}

/// Projection onto the line over a quotient by an ideal inside the radical.
inline int project_point(const ProjectiveLine& line, int p, const RingHom& hom,
                         const ProjectiveLine& qline) {
    line.require_point(p);
    if (hom.source.get() != line.ring.get() || hom.target.get() != qline.ring.get())
        throw error("homomorphism does not connect the two lines");
    if (!hom.structure_preserving() || !hom.surjective())
        throw error("projection requires the canonical quotient epimorphism");
    Ideal rad = jacobson_radical(line.R());
    for (elem k : hom.kernel())
        if (!rad.contains(k))
            throw error("projection kernel must lie inside the radical");
    const PointRep& x = line.points[p].canonical;
    return point_of(qline, hom(x.a), hom(x.b));
}

struct BitMatrix {
    int rows = 0, cols = 0, words_per_row = 0;
    std::vector<std::uint64_t> w;

    BitMatrix() = default;
    BitMatrix(int r, int c)
        : rows(r), cols(c), words_per_row((c + 63) / 64), w(std::size_t(r) * words_per_row, 0) {}

    void set(int i, int j) { w[std::size_t(i) * words_per_row + j / 64] |= 1ull << (j % 64); }
    bool test(int i, int j) const {
        return (w[std::size_t(i) * words_per_row + j / 64] >> (j % 64)) & 1;
    }
    bool row_subset(int i, int j) const {
        const std::uint64_t* wi = &w[std::size_t(i) * words_per_row];
        const std::uint64_t* wj = &w[std::size_t(j) * words_per_row];
        for (int k = 0; k < words_per_row; ++k)
            if (wi[k] & ~wj[k]) return false;
        return true;
    }
    int row_count(int i) const {
        int c = 0;
        for (int k = 0; k < words_per_row; ++k)
            c += std::popcount(w[std::size_t(i) * words_per_row + k]);
        return c;
    }
};

struct DistantGraph {
    const ProjectiveLine* line = nullptr;
    BitMatrix adj;

    bool distant(int p, int q) const { return adj.test(p, q); }
    int degree(int p) const { return adj.row_count(p); }
};

inline DistantGraph distant_graph(const ProjectiveLine& line) {
    const int m = line.size();
    DistantGraph g{&line, BitMatrix(m, m)};
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            if (is_distant(line, p, q)) {
                g.adj.set(p, q);
                g.adj.set(q, p);
            }
    return g;
}

}  // namespace ringline
