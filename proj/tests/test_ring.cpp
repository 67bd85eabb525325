#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "ringline/catalog.hpp"
#include "ringline/ring.hpp"
#include "ringline/verify.hpp"

using namespace ringline;

namespace {

// Test-side oracle: two-sided units straight off the multiplication table.
std::set<elem> brute_units(const Ring& r) {
    std::set<elem> out;
    for (int x = 0; x < r.n; ++x)
        for (int y = 0; y < r.n; ++y)
            if (r.mul(elem(x), elem(y)) == r.one && r.mul(elem(y), elem(x)) == r.one)
                out.insert(elem(x));
    return out;
}

// Test-side oracle for the radical criterion, in both orientations.
std::set<elem> brute_radical(const Ring& r, bool left) {
    std::set<elem> out;
    for (int b = 0; b < r.n; ++b) {
        bool ok = true;
        for (int a = 0; a < r.n && ok; ++a) {
            elem prod = left ? r.mul(elem(a), elem(b)) : r.mul(elem(b), elem(a));
            elem cand = r.sub(r.one, prod);
            bool unit = false;
            for (int y = 0; y < r.n && !unit; ++y)
                unit = r.mul(cand, elem(y)) == r.one && r.mul(elem(y), cand) == r.one;
            ok = unit;
        }
        if (ok) out.insert(elem(b));
    }
    return out;
}

// Brute-force ring isomorphism for tiny rings (fixes 0 and 1, permutes the rest).
bool is_isomorphic(const Ring& a, const Ring& b) {
    if (a.n != b.n) return false;
    std::vector<elem> rest_a, rest_b;
    for (int x = 0; x < a.n; ++x)
        if (elem(x) != a.zero && elem(x) != a.one) rest_a.push_back(elem(x));
    for (int x = 0; x < b.n; ++x)
        if (elem(x) != b.zero && elem(x) != b.one) rest_b.push_back(elem(x));
    std::sort(rest_b.begin(), rest_b.end());
    do {
        std::vector<elem> phi(a.n);
        phi[a.zero] = b.zero;
        phi[a.one] = b.one;
        for (std::size_t i = 0; i < rest_a.size(); ++i) phi[rest_a[i]] = rest_b[i];
        bool ok = true;
        for (int x = 0; x < a.n && ok; ++x)
            for (int y = 0; y < a.n && ok; ++y)
                ok = phi[a.add(elem(x), elem(y))] == b.add(phi[x], phi[y]) &&
                     phi[a.mul(elem(x), elem(y))] == b.mul(phi[x], phi[y]);
        if (ok) return true;
    } while (std::next_permutation(rest_b.begin(), rest_b.end()));
    return false;
}

std::vector<elem> as_sorted(std::vector<elem> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("unit sets match the exhaustive two-sided search", "[ring]") {
    auto z4 = make_zmod(4);
    CHECK(as_sorted(z4->unit_list) == std::vector<elem>{1, 3});
    CHECK(brute_units(*z4) == std::set<elem>{1, 3});

    auto d2 = make_dual(make_gf(2));
    std::set<elem> expect{d2->by_name("1"), d2->by_name("1+e")};
    CHECK(brute_units(*d2) == expect);
    CHECK(std::set<elem>(d2->unit_list.begin(), d2->unit_list.end()) == expect);

    auto u3 = make_upper2(make_gf(3));
    CHECK(u3->unit_count() == 12);
    // invertible iff both diagonal coordinates are nonzero
    for (int x = 0; x < u3->n; ++x) {
        bool diag = (x % 3 != 0) && ((x / 3) % 3 != 0);
        CHECK(u3->unit[x] == diag);
    }
}

TEST_CASE("is_unit examples", "[ring]") {
    auto z6 = make_zmod(6);
    CHECK(z6->is_unit(5));
    auto d2 = make_dual(make_gf(2));
    CHECK_FALSE(d2->is_unit(d2->by_name("e")));
    auto u3 = make_upper2(make_gf(3));
    CHECK(u3->is_unit(u3->by_name("j1+j2")));
    CHECK(u3->by_name("j1+j2") == u3->one);
    CHECK_THROWS_AS(z6->is_unit(elem(6)), foreign_element);
}

TEST_CASE("inverses", "[ring]") {
    auto d3 = make_dual(make_gf(3));
    // 1 - e = 1 + 2e over gf(3); its inverse is 1 + e
    CHECK(d3->inverse(d3->by_name("1+2e")) == d3->by_name("1+e"));
    auto z4 = make_zmod(4);
    CHECK(z4->inverse(3) == 3);
    auto d2 = make_dual(make_gf(2));
    CHECK_THROWS_AS(d2->inverse(d2->by_name("e")), not_a_unit);
}

TEST_CASE("radical of fields is zero", "[ring]") {
    for (int q : {2, 3, 4, 5, 7, 13}) {
        auto k = make_gf(q);
        CHECK(jacobson_radical(*k).members == std::vector<elem>{k->zero});
    }
}

TEST_CASE("radical of the dual numbers is the e-line", "[ring]") {
    for (int q : {2, 3, 4}) {
        auto k = make_gf(q);
        auto d = make_dual(k);
        std::vector<elem> ke;
        elem e = d->scalars->basis[1];
        for (int c = 0; c < q; ++c) ke.push_back(d->mul(d->scalars->embed[c], e));
        CHECK(jacobson_radical(*d).members == as_sorted(ke));
    }
}

TEST_CASE("radical agrees with the brute-force criterion", "[ring]") {
    auto z4 = make_zmod(4);
    CHECK(jacobson_radical(*z4).members == std::vector<elem>{0, 2});
    CHECK(brute_radical(*z4, true) == std::set<elem>{0, 2});

    auto z6 = make_zmod(6);
    CHECK(jacobson_radical(*z6).members == std::vector<elem>{0});

    auto z8 = make_zmod(8);
    CHECK(jacobson_radical(*z8).members == std::vector<elem>{0, 2, 4, 6});
}

TEST_CASE("left and right radical criteria give the same ideal", "[ring]") {
    for (const char* d : {"zmod(4)", "zmod(6)", "zmod(8)", "dual(gf(3))", "upper2(gf(2))",
                          "upper2(gf(3))", "mat2(gf(2))", "anormal(gf(3))", "trunc(gf(3),3)",
                          "product(zmod(4),gf(3))"}) {
        auto r = parse_ring(d);
        INFO(d);
        Ideal left = jacobson_radical(*r);
        CHECK(left.members == jacobson_radical_right(*r).members);
        std::set<elem> lhs(left.members.begin(), left.members.end());
        CHECK(lhs == brute_radical(*r, true));
        CHECK(lhs == brute_radical(*r, false));
    }
}

TEST_CASE("annihilators", "[ring]") {
    auto d3 = make_dual(make_gf(3));
    std::vector<elem> ke{d3->by_name("0"), d3->by_name("e"), d3->by_name("2e")};
    CHECK(as_sorted(annihilator(*d3, ke)) == as_sorted(ke));

    auto z4 = make_zmod(4);
    std::vector<elem> two{2};
    CHECK(annihilator(*z4, two) == std::vector<elem>{0, 2});

    auto g3 = make_gf(3);
    std::vector<elem> one{1};
    CHECK(annihilator(*g3, one) == std::vector<elem>{0});
}

TEST_CASE("quotients by the radical", "[ring]") {
    auto z4 = make_zmod(4);
    auto [q1, h1] = quotient_ring(z4, jacobson_radical(*z4));
    CHECK(q1->n == 2);
    CHECK(is_isomorphic(*q1, *make_gf(2)));
    CHECK(h1.structure_preserving());
    CHECK(h1.surjective());

    auto d3 = make_dual(make_gf(3));
    auto [q2, h2] = quotient_ring(d3, jacobson_radical(*d3));
    CHECK(q2->n == 3);
    CHECK(is_isomorphic(*q2, *make_gf(3)));

    // quotient by the zero ideal keeps the tables
    auto z6 = make_zmod(6);
    auto [q3, h3] = quotient_ring(z6, make_ideal(*z6, {z6->zero}));
    CHECK(q3->add_table == z6->add_table);
    CHECK(q3->mul_table == z6->mul_table);
}

TEST_CASE("unit lifting along the radical projection", "[ring]") {
    for (const char* d : {"zmod(4)", "zmod(8)", "zmod(12)", "dual(gf(3))", "upper2(gf(3))",
                          "trunc(gf(2),4)"}) {
        auto r = parse_ring(d);
        auto [q, h] = quotient_ring(r, jacobson_radical(*r));
        INFO(d);
        for (int x = 0; x < r->n; ++x) CHECK(r->unit[x] == q->unit[h(elem(x))]);
        CHECK(jacobson_radical(*q).members == std::vector<elem>{q->zero});
    }
}

TEST_CASE("nil exponents", "[ring]") {
    CHECK(nil_exponent(*make_dual(make_gf(3))) == 2);
    CHECK(nil_exponent(*make_zmod(8)) == 3);
    CHECK(nil_exponent(*make_gf(7)) == 1);
    CHECK(nil_exponent(*make_trunc(make_gf(3), 3)) == 3);
    CHECK(nil_exponent(*make_trunc(make_gf(2), 4)) == 4);
}

TEST_CASE("ring axioms hold exhaustively across the catalog up to size 64", "[ring]") {
    for (const std::string& d : catalog_ring_descriptors(64)) {
        auto r = parse_ring(d);
        std::string w;
        INFO(d << ": " << w);
        CHECK(check_ring_axioms(*r, &w));
    }
}

TEST_CASE("radical is a two-sided nil ideal", "[ring]") {
    for (const char* d : {"zmod(16)", "dual(gf(4))", "upper2(gf(3))", "mat2(gf(2))",
                          "product(zmod(4),zmod(9))"}) {
        auto r = parse_ring(d);
        Ideal rad = jacobson_radical(*r);
        INFO(d);
        CHECK(is_two_sided_ideal(*r, rad));
        int e = nil_exponent(*r);
        for (elem y : rad.members) CHECK(r->pow(y, e) == r->zero);
    }
}

TEST_CASE("local catalog rings have radical equal to the nonunits", "[ring]") {
    for (const char* d : {"zmod(4)", "zmod(8)", "zmod(9)", "zmod(16)", "zmod(25)", "zmod(27)",
                          "dual(gf(2))", "dual(gf(5))", "trunc(gf(3),3)", "trunc(gf(2),4)"}) {
        auto r = parse_ring(d);
        Ideal rad = jacobson_radical(*r);
        INFO(d);
        for (int x = 0; x < r->n; ++x) CHECK(rad.contains(elem(x)) == !r->unit[x]);
    }
}

TEST_CASE("construction errors", "[ring]") {
    CHECK_THROWS_AS(parse_ring("gf(6)"), parse_error);
    CHECK_THROWS_AS(parse_ring("gf(17)"), parse_error);
    CHECK_THROWS_AS(parse_ring("zmod(1)"), parse_error);
    CHECK_THROWS_AS(parse_ring("zmod(300)"), parse_error);
    CHECK_THROWS_AS(parse_ring("trunc(gf(2),5)"), parse_error);
    CHECK_THROWS_AS(parse_ring("trunc(gf(13),4)"), parse_error);    // 28561 > 4096
    CHECK_THROWS_AS(parse_ring("product(zmod(70),zmod(70))"), parse_error);  // 4900 > 4096
    CHECK_THROWS_AS(parse_ring("dual(zmod(4))"), parse_error);      // K must be a field entry
    CHECK_THROWS_AS(parse_ring("nonsense(3)"), parse_error);
    auto z4 = make_zmod(4);
    CHECK_THROWS_AS(quotient_ring(z4, make_ideal(*z4, {0, 1})), error);  // not an ideal
}

TEST_CASE("descriptors are canonical and reparse", "[ring]") {
    CHECK(parse_ring("dual(gf(3))")->name == "dual(gf(3))");
    CHECK(parse_ring(" product( zmod(2) , zmod(3) ) ")->name == "product(zmod(2),zmod(3))");
    CHECK(parse_ring("gf4")->name == "gf(4)");
    CHECK(parse_ring("gf(4)")->name == "gf(4)");
    CHECK(parse_ring("quotient(zmod(8),rad)")->name == "quotient(zmod(8),rad)");
    CHECK(parse_ring("quotient(zmod(8),{0,4})")->n == 4);
    auto q = parse_ring("quotient(zmod(8),rad)");
    CHECK(q->n == 2);
    CHECK(is_isomorphic(*q, *make_gf(2)));
    for (const std::string& d : catalog_ring_descriptors(27)) {
        auto r = parse_ring(d);
        CHECK(parse_ring(r->name)->name == r->name);
    }
}

TEST_CASE("checked element handles reject foreign rings", "[ring]") {
    auto z4 = make_zmod(4);
    auto z6 = make_zmod(6);
    RingElement a = el(*z4, 3), b = el(*z6, 3);
    CHECK_THROWS_AS(a + b, foreign_element);
    CHECK((a + a).i == 2);
    CHECK((a * a).i == 1);
    CHECK((-a).i == 1);
    CHECK(el(*z4, "3").i == 3);
    CHECK_THROWS_AS(el(*z4, "7"), error);
}

TEST_CASE("product rings multiply componentwise", "[ring]") {
    auto p = make_product(make_zmod(2), make_zmod(3));
    CHECK(p->n == 6);
    CHECK(p->names[p->one] == "(1,1)");
    // units are the componentwise units: (1,1), (1,2)
    CHECK(p->unit_count() == 2);
    Ideal rad = jacobson_radical(*p);
    CHECK(rad.members == std::vector<elem>{p->zero});
}

TEST_CASE("gf(4) is the field with four elements", "[ring]") {
    auto k = make_gf4();
    CHECK(is_field(*k));
    elem w = k->by_name("w");
    CHECK(k->mul(w, w) == k->by_name("w+1"));
    CHECK(k->add(w, k->one) == k->by_name("w+1"));
    CHECK(k->mul(w, k->by_name("w+1")) == k->one);
}
