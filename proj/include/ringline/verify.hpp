#pragma once

// Verification suites: every structural claim the library relies on,
// checked exhaustively over a deterministic catalog of small rings and
// algebras. Each suite returns a VerificationReport with one witnessed
// entry per failed check.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "ringline/algebra.hpp"
#include "ringline/catalog.hpp"
#include "ringline/models.hpp"
#include "ringline/parallelism.hpp"
#include "ringline/projline.hpp"
#include "ringline/report.hpp"

namespace ringline {

namespace detail {

inline std::vector<Matrix2> sample_invertible(const Ring& r, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Matrix2> out;
    for (int tries = 0; int(out.size()) < count && tries < count * 400; ++tries) {
        Matrix2 m{&r, elem(rng() % r.n), elem(rng() % r.n), elem(rng() % r.n), elem(rng() % r.n)};
        if (is_invertible(m)) out.push_back(m);
    }
    return out;
}

inline std::string set_desc(const Ring& r, std::span<const elem> xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += r.names[xs[i]];
    }
    return s + "}";
}

}  // namespace detail

inline VerificationReport suite_ring(const RingPtr& R) {
    const Ring& r = *R;
    Checker c("ring", r.name);

    if (r.n <= 256) {
        std::string w;
        c.check("ring axioms hold exhaustively", check_ring_axioms(r, &w), w);
    } else {
        std::mt19937_64 rng(kDefaultSweepSeed);
        bool ok = true;
        std::string w;
        for (int i = 0; i < 20000 && ok; ++i) {
            elem x = elem(rng() % r.n), y = elem(rng() % r.n), z = elem(rng() % r.n);
            ok = r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)) &&
                 r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)) &&
                 r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z));
            if (!ok) w = "axiom fails at " + r.names[x] + "," + r.names[y] + "," + r.names[z];
        }
        c.check("ring axioms hold on sampled triples", ok, w);
    }

    Ideal rad = jacobson_radical(r);
    Ideal rad_r = jacobson_radical_right(r);
    bool lr_ok = rad.members == rad_r.members;
    c.check("radical criterion is left-right symmetric", lr_ok,
            lr_ok ? "" : "left " + detail::set_desc(r, rad.members) + " vs right " +
                             detail::set_desc(r, rad_r.members));

    bool ideal_ok = is_two_sided_ideal(r, rad);
    int e = nil_exponent(r);
    bool nilpotent_ok = true;
    std::string nw;
    for (elem y : rad.members)
        if (r.pow(y, e) != r.zero) {
            nilpotent_ok = false;
            nw = r.names[y] + "^" + std::to_string(e) + " != 0";
        }
    c.check("radical is a two-sided ideal of nilpotents", ideal_ok && nilpotent_ok, nw);

    bool minimal_ok = (e == 1) ? rad.size() == 1 : [&] {
        for (elem y : rad.members)
            if (r.pow(y, e - 1) != r.zero) return true;
        return false;
    }();
    c.check("nil exponent is minimal", minimal_ok,
            "no radical element needs exponent " + std::to_string(e));

    auto [qring, hom] = quotient_ring(R, rad);
    c.check("quotient by the radical has zero radical",
            jacobson_radical(*qring).members == std::vector<elem>{qring->zero});

    bool lift_ok = true;
    std::string lw;
    for (int x = 0; x < r.n && lift_ok; ++x)
        if (r.unit[x] != qring->unit[hom(elem(x))]) {
            lift_ok = false;
            lw = "unit lifting fails at " + r.names[x];
        }
    c.check("units lift along the radical projection", lift_ok, lw);

    return c.finish();
}

inline VerificationReport suite_projline(const RingPtr& R, std::uint64_t seed = kDefaultSweepSeed) {
    const Ring& r = *R;
    Checker c("projline", r.name);
    ProjectiveLine line = enumerate_points(R);
    DistantGraph g = distant_graph(line);

    {
        bool ok = true;
        std::string w;
        for (int a = 0; a < r.n && ok; ++a)
            for (int b = 0; b < r.n && ok; ++b)
                if ((line.index_of({elem(a), elem(b)}) >= 0) != is_admissible(r, elem(a), elem(b))) {
                    ok = false;
                    w = "pair (" + r.names[a] + "," + r.names[b] + ")";
                }
        c.check("admissible pairs are exactly the enumerated orbit members", ok, w);
    }

    if (r.n <= 16) {
        bool ok = true;
        std::string w;
        for (int a = 0; a < r.n && ok; ++a)
            for (int b = 0; b < r.n && ok; ++b)
                if (is_admissible(r, elem(a), elem(b)) !=
                    is_admissible_by_completion(r, elem(a), elem(b))) {
                    ok = false;
                    w = "pair (" + r.names[a] + "," + r.names[b] + ")";
                }
        c.check("unimodularity matches the completion search", ok, w);
    }

    {
        QuotientLine q = quotient_line(line);
        int rad_size = jacobson_radical(r).size();
        c.check("point count factors through the radical quotient",
                line.size() == rad_size * q.qline.size(),
                std::to_string(line.size()) + " vs " + std::to_string(rad_size) + " * " +
                    std::to_string(q.qline.size()));

        bool dist_ok = true;
        std::vector<int> fiber(q.qline.size(), 0);
        for (int p = 0; p < line.size(); ++p) ++fiber[q.proj[p]];
        bool fiber_ok = std::all_of(fiber.begin(), fiber.end(),
                                    [&](int f) { return f == rad_size; });
        DistantGraph qg = distant_graph(q.qline);
        for (int p = 0; p < line.size() && dist_ok; ++p)
            for (int s = 0; s < line.size(); ++s)
                if (g.distant(p, s) != qg.distant(q.proj[p], q.proj[s])) {
                    dist_ok = false;
                    break;
                }
        c.check("projection preserves distance in both directions with uniform fibers",
                dist_ok && fiber_ok);
    }

    {
        bool sym = true, loop = false, deg_ok = true;
        for (int p = 0; p < line.size(); ++p) {
            if (g.distant(p, p)) loop = true;
            if (g.degree(p) != r.n) deg_ok = false;
            for (int q = 0; q < line.size(); ++q)
                if (g.distant(p, q) != g.distant(q, p)) sym = false;
        }
        c.check("distant graph is symmetric and loop-free", sym && !loop);
        c.check("every vertex has degree |R|", deg_ok);
    }

    if (r.n <= 16) {
        bool ok = true;
        std::string w;
        for (int p = 0; p < line.size() && ok; ++p)
            for (int q = 0; q < line.size() && ok; ++q) {
                bool expect = g.distant(p, q);
                for (const PointRep& x : line.points[p].orbit)
                    for (const PointRep& y : line.points[q].orbit)
                        if (is_invertible({&r, x.a, x.b, y.a, y.b}) != expect) {
                            ok = false;
                            w = "points " + line.label(p) + ", " + line.label(q);
                        }
            }
        c.check("distance is independent of the chosen representatives", ok, w);
    }

    if (r.n <= 64) {
        Ideal rad = jacobson_radical(r);
        bool ok = true;
        std::string w;
        for (int b = 0; b < r.n && ok; ++b) {
            bool always = true;
            for (int a = 0; a < r.n && always; ++a)
                always = is_invertible({&r, r.one, elem(b), elem(a), r.one});
            if (always != rad.contains(elem(b))) {
                ok = false;
                w = "entry " + r.names[b];
            }
        }
        c.check("radical entries are exactly the universally completable ones", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (const Matrix2& m : detail::sample_invertible(r, 6, seed)) {
            std::vector<int> img = apply_matrix_all(line, m);
            for (int p = 0; p < line.size() && ok; ++p)
                for (int q = 0; q < line.size(); ++q)
                    if (g.distant(p, q) != g.distant(img[p], img[q])) {
                        ok = false;
                        w = "points " + line.label(p) + ", " + line.label(q);
                        break;
                    }
        }
        c.check("sampled matrix actions preserve the distant relation", ok, w);
    }

    return c.finish();
}

inline VerificationReport suite_parallelism(const RingPtr& R,
                                            std::uint64_t seed = kDefaultSweepSeed) {
    const Ring& r = *R;
    Checker c("parallelism", r.name);
    ProjectiveLine line = enumerate_points(R);
    DistantGraph g = distant_graph(line);
    QuotientLine q = quotient_line(line);
    ParallelismReport rep = parallel_classes(line, g);

    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < line.size() && ok; ++p)
            for (int s = 0; s < line.size(); ++s)
                if (is_parallel_def(g, p, s) != is_parallel_quot(q, p, s)) {
                    ok = false;
                    w = "points " + line.label(p) + ", " + line.label(s);
                    break;
                }
        c.check("definitional and quotient parallelism agree on all pairs", ok, w);
    }

    c.check("parallelism is an equivalence relation", rep.equivalence);
    c.check("no neighbourhood is properly contained in another", rep.equivalence);
    c.check("every parallel class has the size of the radical",
            rep.classes_uniform && rep.class_size == rep.radical_size,
            std::to_string(rep.classes.size()) + " classes of size " +
                std::to_string(rep.class_size) + ", radical size " +
                std::to_string(rep.radical_size));

    {
        Ideal rad = jacobson_radical(r);
        std::set<int> expected;
        for (elem b : rad.members) expected.insert(point_of(line, r.one, b));
        std::set<int> got;
        int inf = point_of(line, r.one, r.zero);
        for (int s = 0; s < line.size(); ++s)
            if (is_parallel_def(g, inf, s)) got.insert(s);
        c.check("the parallel class of (1,0) is the radical row", expected == got);
    }

    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < line.size() && ok; ++p)
            for (int s = 0; s < line.size(); ++s)
                if (p != s && is_parallel_def(g, p, s) && g.distant(p, s)) {
                    ok = false;
                    w = "points " + line.label(p) + ", " + line.label(s);
                    break;
                }
        c.check("parallel points are never distant", ok, w);
    }

    {
        bool ok = true;
        for (const Matrix2& m : detail::sample_invertible(r, 6, seed)) {
            std::vector<int> img = apply_matrix_all(line, m);
            for (int p = 0; p < line.size() && ok; ++p)
                for (int s = 0; s < line.size(); ++s)
                    if (is_parallel_def(g, p, s) != is_parallel_def(g, img[p], img[s])) {
                        ok = false;
                        break;
                    }
        }
        c.check("sampled matrix actions preserve parallelism", ok);
    }

    {
        bool local = is_local_ring(r);
        std::string w;
        if (rep.witness)
            w = "non-distant non-parallel pair " + line.label(rep.witness->first) + ", " +
                line.label(rep.witness->second);
        c.check("parallelism equals non-distance exactly for local rings",
                rep.relation_equal_to_nondistant == local,
                w.empty() ? "relations coincide but the ring is not local" : w);
    }

    return c.finish();
}

inline VerificationReport suite_trafo(const AlgebraPtr& A,
                                      std::uint64_t seed = kDefaultSweepSeed) {
    const KAlgebra& a = *A;
    const Ring& r = a.R();
    Checker c("trafo", algebra_descriptor(a));

    {
        bool ok = true;
        std::set<int> image;
        for (int z = 0; z < r.n; ++z) image.insert(a.iota_point[z]);
        if (int(image.size()) != r.n) ok = false;
        for (int p = 0; p < a.line->size(); ++p)
            if (a.graph.distant(p, a.inf) != image.count(p)) ok = false;
        c.check("iota is a bijection onto the neighbourhood of the base point", ok);
    }

    {
        int zero_one = point_of(*a.line, r.zero, r.one);
        std::vector<int> par, nondist;
        for (int p = 0; p < a.line->size(); ++p) {
            if (a.graph.adj.row_subset(zero_one, p)) par.push_back(p);
            if (!a.graph.distant(p, zero_one)) nondist.push_back(p);
        }
        std::vector<elem> tr_par = affine_trace(a, par);
        std::vector<elem> tr_nd = affine_trace(a, nondist);
        std::vector<elem> nonunits = cone_of_singularity(r);
        bool tr_ok = tr_par == a.rad.members;
        c.check("affine trace of the parallel class of (0,1) is the radical", tr_ok,
                tr_ok ? "" : detail::set_desc(r, tr_par) + " vs " +
                                 detail::set_desc(r, a.rad.members));
        c.check("affine trace of the non-distant set of (0,1) is the nonunit cone",
                tr_nd == nonunits);
    }

    {
        auto lines = regular_lines(a);
        long long expected =
            (long long)r.unit_count() * r.n / ((a.K().n - 1) * (long long)a.K().n);
        c.check("regular line count matches the unit/field quotient",
                (long long)lines.size() == expected,
                std::to_string(lines.size()) + " vs " + std::to_string(expected));
    }

    {
        TrafoSweep s = trafo_theorem_sweep(a, 9, 10000, seed);
        std::string cover = (s.exhaustive ? "exhaustive, " : "group members + samples, ") +
                            std::to_string(s.matrices) + " matrices, " +
                            std::to_string(s.total_matrices) + " total";
        c.check("totality criterion: everywhere-defined invertibles are exactly the entry condition",
                s.criterion_ok, s.witness.empty() ? cover : s.witness);
        c.check("every total matrix factors through the unitriangular form", s.factorization_ok,
                s.witness);
        c.check("total induced maps are bijections", s.bijective_ok, s.witness);
        if (a.K().n > 2) {
            c.check("total induced maps are affine exactly at zero upper entry",
                    s.affine_iff_b0_ok, s.witness);
        } else {
            c.check("zero upper entry still induces affine maps over the two-element field",
                    s.affine_iff_b0_ok,
                    "affine with nonzero entry: " + std::to_string(s.affine_with_nonzero_b) +
                        ", non-affine: " + std::to_string(s.nonaffine_with_nonzero_b));
        }
    }

    {
        bool ok = true;
        std::string w;
        for (elem b : a.rad.members) {
            TransformDescriptor t = induced_transform(a, beta_matrix(a, b));
            if (!t.total()) {
                ok = false;
                w = "radical shift of " + r.names[b] + " is not total";
                break;
            }
            for (int z = 0; z < r.n; ++z)
                if (beta_polynomial(a, b, elem(z)) != t.image[z]) {
                    ok = false;
                    w = "mismatch at b = " + r.names[b] + ", z = " + r.names[z];
                    break;
                }
        }
        c.check("polynomial form matches the induced map on the radical shifts", ok, w);
    }

    {
        MatrixGroup B = group_B(a);
        bool comm = true, closed = true;
        for (const Matrix2& x : B.members)
            for (const Matrix2& y : B.members) {
                Matrix2 p = mat_mul(x, y);
                if (!mat_eq(p, mat_mul(y, x))) comm = false;
                if (!is_b_matrix(a, p)) closed = false;
            }
        std::set<int> cls;
        int inf = a.inf;
        for (int p = 0; p < a.line->size(); ++p)
            if (a.graph.adj.row_subset(inf, p)) cls.insert(p);
        std::set<int> images;
        for (const Matrix2& m : B.members) images.insert(apply_matrix(*a.line, inf, m));
        bool regular = images == cls && int(images.size()) == int(B.members.size());
        c.check("B is commutative and closed with one member per radical element",
                comm && closed && int(B.members.size()) == a.rad.size());
        c.check("B acts regularly on the parallel class of the base point", regular);
    }

    {
        MatrixGroup T = group_T(a);
        bool ok = int(T.members.size()) == r.n;
        std::string w;
        for (const Matrix2& m : T.members) {
            TransformDescriptor t = induced_transform(a, m);
            if (!t.total()) {
                ok = false;
                w = "translation matrix is not total";
                break;
            }
            for (int z = 0; z < r.n; ++z)
                if (t.image[z] != r.add(elem(z), m.c)) {
                    ok = false;
                    w = "translation table wrong at c = " + r.names[m.c];
                    break;
                }
        }
        c.check("T induces exactly the translations", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int cc = 0; cc < r.n && ok; ++cc) {
            Matrix2 tm = tau_matrix(a, elem(cc));
            for (elem b : a.rad.members) {
                int p = point_of(*a.line, r.one, b);
                bool fixed_geo = apply_matrix(*a.line, p, tm) == p;
                if (tau_fixes(a, elem(cc), b) != fixed_geo) {
                    ok = false;
                    w = "c = " + r.names[cc] + ", b = " + r.names[b];
                    break;
                }
            }
        }
        c.check("translation fixed points obey the sandwich law", ok, w);

        bool ann_ok = true;
        for (elem cc : a.ann_rad)
            for (elem b : a.rad.members)
                if (!tau_fixes(a, cc, b)) ann_ok = false;
        c.check("annihilator translations fix the whole parallel class", ann_ok);
    }

    {
        MatrixGroup N = group_N(a);
        MatrixGroup B = group_B(a);
        bool comm = true, closed = true, inv_ok = true, commute_b = true, fixes = true,
             affine_ok = true;
        for (const Matrix2& x : N.members) {
            Matrix2 xin = matrix_inverse(x);
            if (!is_n_matrix(a, xin)) inv_ok = false;
            for (const Matrix2& y : N.members) {
                Matrix2 p = mat_mul(x, y);
                if (!mat_eq(p, mat_mul(y, x))) comm = false;
                if (!is_n_matrix(a, p)) closed = false;
            }
            for (const Matrix2& b : B.members)
                if (!commutes(a, x, b)) commute_b = false;
            for (int p = 0; p < a.line->size(); ++p)
                if (a.graph.adj.row_subset(a.inf, p) && apply_matrix(*a.line, p, x) != p)
                    fixes = false;
            TransformDescriptor t = induced_transform(a, x);
            if (!t.total() || !is_affine_map(a, t.image)) affine_ok = false;
            elem n1 = r.sub(x.a, r.one);
            for (int z = 0; z < r.n; ++z)
                if (t.image[z] != r.add(r.mul(elem(z), r.add(r.one, n1)), x.c)) affine_ok = false;
        }
        c.check("N is a commutative group of affine maps", comm && closed && inv_ok && affine_ok,
                "|N| = " + std::to_string(N.members.size()));
        c.check("N commutes with B elementwise", commute_b);
        c.check("N fixes the parallel class of the base point pointwise", fixes);
    }

    return c.finish();
}

inline VerificationReport suite_models(const AlgebraPtr& A) {
    const KAlgebra& a = *A;
    const Ring& r = a.R();
    const Ring& k = a.K();
    Checker c("models", algebra_descriptor(a));

    if (is_dual_algebra(a)) {
        for (elem t = 1; int(t) < k.n; ++t) {
            std::string at_t = " (t = " + k.names[t] + ")";
            elem b = a.smul(t, a.basis[1]);
            TransformDescriptor gen = induced_transform(a, beta_matrix(a, b));
            c.check("coordinate form matches the induced transform" + at_t,
                    gen.total() && dual_beta_table(a, t) == gen.image);

            bool nu_ok = true;
            for (int l1 = 0; l1 < k.n && nu_ok; ++l1)
                for (int l2 = 0; l2 < k.n; ++l2) {
                    elem n1 = a.smul(elem(l1), a.basis[1]);
                    elem n2 = a.smul(elem(l2), a.basis[1]);
                    TransformDescriptor nu = induced_transform(a, nu_matrix(a, n1, n2));
                    if (!nu.total() || dual_nu_table(a, elem(l1), elem(l2)) != nu.image) {
                        nu_ok = false;
                        break;
                    }
                }
            c.check("shear and vertical translation forms match N" + at_t, nu_ok);

            bool vert_ok = true;
            for (const auto& line : affine_lines(a))
                if (is_vertical_line(a, line)) {
                    auto img = detail::apply_table_to_set(gen.image, line);
                    std::vector<elem> sorted = line;
                    std::sort(sorted.begin(), sorted.end());
                    if (img != sorted) vert_ok = false;
                }
            c.check("vertical lines are invariant" + at_t, vert_ok);

            if (k.n > 2) {
                ModelCurve sp = standard_parabola(a, t);
                c.check("the base line maps to a parabola with leading coefficient t" + at_t,
                        sp.kind == CurveKind::parabola && sp.graph_coeffs.size() == 3 &&
                            sp.graph_coeffs[2] == t);

                bool equal = compare_orbits(a, t);
                auto tn = orbit_T(a, sp);
                auto nn = orbit_N(a, sp);
                bool counts_ok = int(nn.size()) == k.n * k.n &&
                                 int(tn.size()) == (a.field_char == 2 ? k.n : k.n * k.n);
                bool all_parabolas = true;
                for (const auto& m : nn)
                    if (m.kind != CurveKind::parabola || m.graph_coeffs.size() != 3 ||
                        m.graph_coeffs[2] != t)
                        all_parabolas = false;
                c.check("translate family equals the orbit family exactly off characteristic two" +
                            at_t,
                        equal == (a.field_char != 2) && counts_ok && all_parabolas,
                        std::to_string(tn.size()) + " translates vs " + std::to_string(nn.size()) +
                            " orbit members");

                ModelLineSet mls = model_line_set(a, t);
                c.check("new line family equals the image of the affine line family" + at_t,
                        mls.lines.size() == affine_lines(a).size());

                bool join_ok = true;
                for (int x = 0; x < r.n && join_ok; ++x)
                    for (int y = x + 1; y < r.n; ++y) {
                        int through = 0;
                        for (const auto& l : mls.lines) {
                            bool hx = std::binary_search(l.points.begin(), l.points.end(), elem(x));
                            bool hy = std::binary_search(l.points.begin(), l.points.end(), elem(y));
                            if (hx && hy) ++through;
                        }
                        if (through != 1) {
                            join_ok = false;
                            break;
                        }
                    }
                c.check("any two distinct points lie on exactly one new line" + at_t, join_ok);
            }
        }

        {
            // N acts regularly on the regular lines
            auto lines = regular_lines(a);
            std::set<std::vector<elem>> line_set(lines.begin(), lines.end());
            bool regular_action = true;
            std::vector<elem> base;
            for (int kk = 0; kk < k.n; ++kk) base.push_back(a.scalar(elem(kk)));
            std::sort(base.begin(), base.end());
            std::set<std::vector<elem>> orbit;
            for (int l1 = 0; l1 < k.n; ++l1)
                for (int l2 = 0; l2 < k.n; ++l2) {
                    auto img = detail::apply_table_to_set(dual_nu_table(a, elem(l1), elem(l2)), base);
                    if (!line_set.count(img)) regular_action = false;
                    orbit.insert(img);
                }
            regular_action = regular_action && orbit.size() == lines.size() &&
                             int(orbit.size()) == k.n * k.n;
            c.check("N acts regularly on the regular lines", regular_action);
        }
    } else if (is_ternion_algebra(a)) {
        for (elem t = 1; int(t) < k.n; ++t) {
            std::string at_t = " (t = " + k.names[t] + ")";
            if (k.n == 2) {
                // parabolas degenerate over the two-element field; only the
                // coordinate form and the invariances are meaningful
                elem b = a.smul(t, a.basis[2]);
                TransformDescriptor gen = induced_transform(a, beta_matrix(a, b));
                c.check("coordinate form matches the induced transform" + at_t,
                        gen.total() && ternion_beta_table(a, t) == gen.image);
                bool cone_ok = true;
                for (elem z : cone_of_singularity(r))
                    if (gen.image[z] != z) cone_ok = false;
                c.check("the nonunit cone is fixed pointwise" + at_t, cone_ok);
                continue;
            }
            TernionReport rep = ternion_classify(a, t);
            c.check("coordinate form matches the induced transform" + at_t, rep.formula_agrees);
            c.check("vertical lines are invariant" + at_t, rep.vertical_lines_invariant);
            c.check("the nonunit cone is fixed pointwise" + at_t, rep.cone_fixed_pointwise);
            c.check("restrictions to cone-parallel planes are shears" + at_t,
                    rep.shear_on_z1_planes && rep.shear_on_z2_planes);
            c.check("the base plane maps onto the saddle surface" + at_t,
                    rep.plane_maps_to_paraboloid);
            c.check("regular base-plane lines map to parabolas on the surface" + at_t,
                    rep.regular_images_are_parabolas_on_surface,
                    std::to_string(rep.parabola_family_size) + " parabolas");
            c.check("ruling-direction lines map to lines on the surface" + at_t,
                    rep.ruling_images_are_lines_on_surface,
                    std::to_string(rep.ruling_family_size) + " rulings");
            c.check("plane-cut family members are parabolas" + at_t, rep.v_members_are_parabolas);
            c.check("plane cuts and orbit members are mutual translates" + at_t,
                    rep.v_and_orbit_mutual_translates);
            c.check("translate dichotomy matches the characteristic" + at_t,
                    rep.v_translate_matches_char);
            if (k.n > 2) {
                ModelLineSet mls = model_line_set(a, t);
                c.check("new line family equals the image of the affine line family" + at_t,
                        mls.lines.size() == affine_lines(a).size());
            }
        }
    } else {
        c.check("algebra admits one of the two worked models", false,
                "neither dual-number nor ternion shaped");
    }

    return c.finish();
}

// ---------------------------------------------------------------------------
// Deterministic catalog.

inline std::vector<std::string> catalog_ring_descriptors(int max_size = 27) {
    std::vector<std::pair<std::string, long long>> all;
    const int fields[] = {2, 3, 4, 5, 7, 11, 13};
    for (int q : fields) all.push_back({"gf(" + std::to_string(q) + ")", q});
    for (int n = 2; n <= 256; ++n) all.push_back({"zmod(" + std::to_string(n) + ")", n});
    for (int q : fields) {
        std::string k = "gf(" + std::to_string(q) + ")";
        all.push_back({"dual(" + k + ")", (long long)q * q});
        all.push_back({"anormal(" + k + ")", (long long)q * q});
        for (int d = 2; d <= 4; ++d) {
            long long s = 1;
            for (int i = 0; i < d; ++i) s *= q;
            all.push_back({"trunc(" + k + "," + std::to_string(d) + ")", s});
        }
        all.push_back({"upper2(" + k + ")", (long long)q * q * q});
    }
    all.push_back({"mat2(gf(2))", 16});
    all.push_back({"product(zmod(2),zmod(3))", 6});
    all.push_back({"product(gf(2),gf(3))", 6});
    all.push_back({"product(gf(3),gf(3))", 9});
    all.push_back({"product(zmod(4),zmod(4))", 16});
    all.push_back({"product(dual(gf(2)),gf(3))", 12});
    all.push_back({"quotient(zmod(8),rad)", 2});
    all.push_back({"quotient(dual(gf(3)),rad)", 3});
    all.push_back({"quotient(trunc(gf(2),4),rad)", 2});
    all.push_back({"quotient(zmod(12),{0,6})", 6});

    std::vector<std::string> out;
    for (const auto& [d, s] : all)
        if (s <= max_size && s <= kDefaultMaxRingSize) out.push_back(d);
    return out;
}

inline std::vector<std::string> catalog_algebra_descriptors(int max_size = 27) {
    std::vector<std::pair<std::string, long long>> all;
    const int fields[] = {2, 3, 4, 5, 7, 11, 13};
    for (int q : fields) {
        std::string k = "gf(" + std::to_string(q) + ")";
        all.push_back({"dual(" + k + ")@" + k, (long long)q * q});
        all.push_back({"anormal(" + k + ")@" + k, (long long)q * q});
        for (int d = 2; d <= 4; ++d) {
            long long s = 1;
            for (int i = 0; i < d; ++i) s *= q;
            all.push_back({"trunc(" + k + "," + std::to_string(d) + ")@" + k, s});
        }
        all.push_back({"upper2(" + k + ")@" + k, (long long)q * q * q});
    }
    all.push_back({"mat2(gf(2))@gf(2)", 16});
    all.push_back({"gf(4)@gf(2)", 4});
    std::vector<std::string> out;
    for (const auto& [d, s] : all)
        if (s <= max_size && s <= kDefaultMaxRingSize) out.push_back(d);
    return out;
}

/// Runs every suite over the catalog, optionally on several threads;
/// reports come back in catalog order regardless of the job count.
inline std::vector<VerificationReport> verify_all(int max_size = 27, int jobs = 1,
                                                  std::uint64_t seed = kDefaultSweepSeed) {
    // max_size selects catalog entries by their final size; constructions may
    // pass through larger intermediates, so the build cap stays at the default
    std::vector<std::function<VerificationReport()>> tasks;
    for (const std::string& d : catalog_ring_descriptors(max_size)) {
        tasks.push_back([d] { return suite_ring(parse_ring(d)); });
        tasks.push_back([d, seed] { return suite_projline(parse_ring(d), seed); });
        tasks.push_back([d, seed] { return suite_parallelism(parse_ring(d), seed); });
    }
    for (const std::string& d : catalog_algebra_descriptors(max_size)) {
        tasks.push_back([d, seed] { return suite_trafo(parse_algebra(d), seed); });
        if (d.rfind("dual(", 0) == 0 || d.rfind("upper2(", 0) == 0)
            tasks.push_back([d] { return suite_models(parse_algebra(d)); });
    }

    std::vector<VerificationReport> out(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::future<void>> futs;
    for (int j = 0; j < jobs; ++j) futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
    return out;
}

/// Seed from the environment (RINGLINE_SEED) or the built-in default.
inline std::uint64_t env_seed() {
    if (const char* s = std::getenv("RINGLINE_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw error("RINGLINE_SEED must be an unsigned integer");
        }
    }
    return kDefaultSweepSeed;
}

}  // namespace ringline
