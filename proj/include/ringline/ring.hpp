#pragma once

// Finite unital rings as fully materialized operation tables.
//
// Elements are dense indices 0..n-1. Addition and multiplication are n*n
// lookup tables, negation, the unit mask and the inverse table are
// precomputed once. Rings are immutable after construction and safe to
// share across threads; every operation below is read-only.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringline/errors.hpp"

namespace ringline {

using elem = std::uint16_t;

inline constexpr int kDefaultMaxRingSize = 4096;

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// K-linear structure recorded by catalog constructions that take a field
/// parameter: the image of every field element and a K-basis of the ring.
struct ScalarStructure {
    std::string field;            // descriptor of K
    std::vector<elem> embed;      // field index -> ring index
    std::vector<elem> basis;
};

struct Ring {
    std::string name;
    int n = 0;
    elem zero = 0;
    elem one = 0;
    std::vector<elem> add_table;  // row-major n*n
    std::vector<elem> mul_table;
    std::vector<std::string> names;
    std::optional<ScalarStructure> scalars;

    // filled by seal_ring()
    std::vector<elem> neg;
    std::vector<bool> unit;
    std::vector<elem> inv;
    std::vector<elem> unit_list;

    int size() const { return n; }

    elem add(elem x, elem y) const { return add_table[std::size_t(x) * n + y]; }
    elem mul(elem x, elem y) const { return mul_table[std::size_t(x) * n + y]; }
    elem sub(elem x, elem y) const { return add(x, neg[y]); }

    elem pow(elem x, int e) const {
        elem r = one;
        for (int i = 0; i < e; ++i) r = mul(r, x);
        return r;
    }

    bool valid_index(elem x) const { return int(x) < n; }

    void require(elem x) const {
        if (!valid_index(x))
            throw foreign_element("index " + std::to_string(x) + " is not an element of " + name);
    }

    bool is_unit(elem x) const {
        require(x);
        return unit[x];
    }

    elem inverse(elem x) const {
        require(x);
        if (!unit[x]) throw not_a_unit(names[x] + " is not a unit of " + name);
        return inv[x];
    }

    elem by_name(const std::string& s) const {
        for (int i = 0; i < n; ++i)
            if (names[i] == s) return elem(i);
        throw error("no element named '" + s + "' in " + name);
    }

    int unit_count() const { return int(unit_list.size()); }
};

namespace detail {

/// Validates the raw tables and computes the derived data. Units are found
/// by exhaustive two-sided inverse search.
inline RingPtr seal_ring(Ring&& r) {
    const int n = r.n;
    if (n < 2) throw error("rings with 1 = 0 are excluded");
    if (n > kDefaultMaxRingSize)
        throw error("ring size " + std::to_string(n) + " exceeds the hard size cap");
    if (int(r.add_table.size()) != n * n || int(r.mul_table.size()) != n * n)
        throw error("operation tables have the wrong shape");
    if (r.names.empty()) {
        r.names.resize(n);
        for (int i = 0; i < n; ++i) r.names[i] = std::to_string(i);
    }
    if (int(r.names.size()) != n) throw error("element name table has the wrong size");
    if (r.zero == r.one) throw error("rings with 1 = 0 are excluded");

    for (int x = 0; x < n; ++x) {
        elem e = elem(x);
        if (r.add(e, r.zero) != e || r.add(r.zero, e) != e) throw error("zero is not neutral");
        if (r.mul(e, r.one) != e || r.mul(r.one, e) != e) throw error("one is not neutral");
    }

    r.neg.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int y = 0; y < n; ++y)
            if (r.add(elem(x), elem(y)) == r.zero) {
                r.neg[x] = elem(y);
                found = true;
                break;
            }
        if (!found) throw error("addition table is not a group");
    }

    r.unit.assign(n, false);
    r.inv.assign(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r.mul(elem(x), elem(y)) == r.one && r.mul(elem(y), elem(x)) == r.one) {
                r.unit[x] = true;
                r.inv[x] = elem(y);
                break;
            }
    r.unit_list.clear();
    for (int x = 0; x < n; ++x)
        if (r.unit[x]) r.unit_list.push_back(elem(x));

    return std::make_shared<const Ring>(std::move(r));
}

}  // namespace detail

/// A checked element handle; mixing elements of different rings throws.
struct RingElement {
    const Ring* ring = nullptr;
    elem i = 0;

    const std::string& str() const { return ring->names[i]; }
    bool is_unit() const { return ring->is_unit(i); }
    RingElement inverse() const { return {ring, ring->inverse(i)}; }

    friend RingElement operator+(RingElement x, RingElement y) {
        same(x, y);
        return {x.ring, x.ring->add(x.i, y.i)};
    }
    friend RingElement operator-(RingElement x, RingElement y) {
        same(x, y);
        return {x.ring, x.ring->sub(x.i, y.i)};
    }
    friend RingElement operator*(RingElement x, RingElement y) {
        same(x, y);
        return {x.ring, x.ring->mul(x.i, y.i)};
    }
    RingElement operator-() const { return {ring, ring->neg[i]}; }
    friend bool operator==(RingElement x, RingElement y) {
        same(x, y);
        return x.i == y.i;
    }

    static void same(RingElement x, RingElement y) {
        if (x.ring != y.ring) throw foreign_element("elements of different rings");
    }
};

inline RingElement el(const Ring& r, elem i) {
    r.require(i);
    return {&r, i};
}

inline RingElement el(const Ring& r, const std::string& s) { return {&r, r.by_name(s)}; }

struct Ideal {
    const Ring* ring = nullptr;
    std::vector<elem> members;  // sorted, unique
    std::vector<bool> mask;

    bool contains(elem x) const { return mask[x]; }
    int size() const { return int(members.size()); }
};

inline Ideal make_ideal(const Ring& r, std::vector<elem> members) {
    for (elem x : members) r.require(x);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Ideal I{&r, std::move(members), std::vector<bool>(r.n, false)};
    for (elem x : I.members) I.mask[x] = true;
    return I;
}

// A finite subset closed under addition and containing 0 is a subgroup.
inline bool is_additive_subgroup(const Ring& r, const Ideal& I) {
    if (I.ring != &r) throw foreign_element("ideal of a different ring");
    if (!I.contains(r.zero)) return false;
    for (elem x : I.members)
        for (elem y : I.members)
            if (!I.contains(r.add(x, y))) return false;
    return true;
}

inline bool is_two_sided_ideal(const Ring& r, const Ideal& I) {
    if (!is_additive_subgroup(r, I)) return false;
    for (elem x : I.members)
        for (int a = 0; a < r.n; ++a)
            if (!I.contains(r.mul(elem(a), x)) || !I.contains(r.mul(x, elem(a)))) return false;
    return true;
}

/// b lies in the Jacobson radical iff 1 - a*b is a unit for every a.
inline Ideal jacobson_radical(const Ring& r) {
    std::vector<elem> members;
    for (int b = 0; b < r.n; ++b) {
        bool ok = true;
        for (int a = 0; a < r.n && ok; ++a)
            ok = r.unit[r.sub(r.one, r.mul(elem(a), elem(b)))];
        if (ok) members.push_back(elem(b));
    }
    return make_ideal(r, std::move(members));
}

/// Same set from the mirrored criterion (1 - b*a a unit for every a).
inline Ideal jacobson_radical_right(const Ring& r) {
    std::vector<elem> members;
    for (int b = 0; b < r.n; ++b) {
        bool ok = true;
        for (int a = 0; a < r.n && ok; ++a)
            ok = r.unit[r.sub(r.one, r.mul(elem(b), elem(a)))];
        if (ok) members.push_back(elem(b));
    }
    return make_ideal(r, std::move(members));
}

/// Two-sided annihilator {a : a*s = s*a = 0 for all s in S}.
inline std::vector<elem> annihilator(const Ring& r, std::span<const elem> s) {
    for (elem x : s) r.require(x);
    std::vector<elem> out;
    for (int a = 0; a < r.n; ++a) {
        bool ok = true;
        for (elem x : s)
            if (r.mul(elem(a), x) != r.zero || r.mul(x, elem(a)) != r.zero) {
                ok = false;
                break;
            }
        if (ok) out.push_back(elem(a));
    }
    return out;
}

/// Least e >= 1 with y^e = 0 for every radical element (1 for zero radical).
inline int nil_exponent(const Ring& r) {
    Ideal rad = jacobson_radical(r);
    for (int e = 1; e <= r.n + 1; ++e) {
        bool all_zero = true;
        for (elem y : rad.members)
            if (r.pow(y, e) != r.zero) {
                all_zero = false;
                break;
            }
        if (all_zero) return e;
    }
    throw error("radical of " + r.name + " contains a non-nilpotent element");
}

struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<elem> map;  // source index -> target index

    elem operator()(elem x) const {
        source->require(x);
        return map[x];
    }

    bool structure_preserving() const {
        const Ring& s = *source;
        const Ring& t = *target;
        if (int(map.size()) != s.n) return false;
        if (map[s.zero] != t.zero || map[s.one] != t.one) return false;
        for (int x = 0; x < s.n; ++x)
            for (int y = 0; y < s.n; ++y) {
                if (map[s.add(elem(x), elem(y))] != t.add(map[x], map[y])) return false;
                if (map[s.mul(elem(x), elem(y))] != t.mul(map[x], map[y])) return false;
            }
        return true;
    }

    std::vector<elem> kernel() const {
        std::vector<elem> k;
        for (int x = 0; x < source->n; ++x)
            if (map[x] == target->zero) k.push_back(elem(x));
        return k;
    }

    bool surjective() const {
        std::vector<bool> hit(target->n, false);
        for (elem y : map) hit[y] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
};

/// Coset ring by a two-sided ideal, with the canonical projection.
/// Coset representatives are the minimal element indices.
inline std::pair<RingPtr, RingHom> quotient_ring(const RingPtr& R, const Ideal& I) {
    const Ring& r = *R;
    if (I.ring != &r) throw foreign_element("ideal of a different ring");
    if (!is_two_sided_ideal(r, I)) throw error("quotient requires a two-sided ideal");

    std::vector<elem> rep(r.n);
    for (int x = 0; x < r.n; ++x) {
        elem m = elem(r.n - 1);
        bool first = true;
        for (elem i : I.members) {
            elem y = r.add(elem(x), i);
            if (first || y < m) m = y, first = false;
        }
        rep[x] = m;
    }

    std::vector<elem> reps;
    for (int x = 0; x < r.n; ++x)
        if (rep[x] == elem(x)) reps.push_back(elem(x));
    std::vector<int> new_index(r.n, -1);
    for (int i = 0; i < int(reps.size()); ++i) new_index[reps[i]] = i;

    Ring q;
    q.n = int(reps.size());
    q.zero = elem(new_index[rep[r.zero]]);
    q.one = elem(new_index[rep[r.one]]);
    q.add_table.resize(std::size_t(q.n) * q.n);
    q.mul_table.resize(std::size_t(q.n) * q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            q.add_table[std::size_t(i) * q.n + j] = elem(new_index[rep[r.add(reps[i], reps[j])]]);
            q.mul_table[std::size_t(i) * q.n + j] = elem(new_index[rep[r.mul(reps[i], reps[j])]]);
        }
    q.names.resize(q.n);
    for (int i = 0; i < q.n; ++i) q.names[i] = "[" + r.names[reps[i]] + "]";

    std::string ideal_desc;
    if (I.members == jacobson_radical(r).members) {
        ideal_desc = "rad";
    } else {
        ideal_desc = "{";
        for (std::size_t i = 0; i < I.members.size(); ++i) {
            if (i) ideal_desc += ",";
            ideal_desc += std::to_string(I.members[i]);
        }
        ideal_desc += "}";
    }
    q.name = "quotient(" + r.name + "," + ideal_desc + ")";

    RingPtr qp = detail::seal_ring(std::move(q));
    RingHom hom{R, qp, {}};
    hom.map.resize(r.n);
    for (int x = 0; x < r.n; ++x) hom.map[x] = elem(new_index[rep[x]]);
    return {qp, hom};
}

/// Exhaustive axiom check; reports the first violation through `witness`.
inline bool check_ring_axioms(const Ring& r, std::string* witness = nullptr) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    const int n = r.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (r.add(elem(x), elem(y)) != r.add(elem(y), elem(x)))
                return fail("addition not commutative at " + r.names[x] + "," + r.names[y]);
            for (int z = 0; z < n; ++z) {
                elem ex = elem(x), ey = elem(y), ez = elem(z);
                if (r.add(r.add(ex, ey), ez) != r.add(ex, r.add(ey, ez)))
                    return fail("addition not associative at " + r.names[x] + "," + r.names[y] + "," + r.names[z]);
                if (r.mul(r.mul(ex, ey), ez) != r.mul(ex, r.mul(ey, ez)))
                    return fail("multiplication not associative at " + r.names[x] + "," + r.names[y] + "," + r.names[z]);
                if (r.mul(ex, r.add(ey, ez)) != r.add(r.mul(ex, ey), r.mul(ex, ez)))
                    return fail("left distributivity fails at " + r.names[x] + "," + r.names[y] + "," + r.names[z]);
                if (r.mul(r.add(ex, ey), ez) != r.add(r.mul(ex, ez), r.mul(ey, ez)))
                    return fail("right distributivity fails at " + r.names[x] + "," + r.names[y] + "," + r.names[z]);
            }
        }
    for (int x = 0; x < n; ++x) {
        bool has_two_sided = false;
        for (int y = 0; y < n; ++y)
            if (r.mul(elem(x), elem(y)) == r.one && r.mul(elem(y), elem(x)) == r.one) {
                has_two_sided = true;
                break;
            }
        if (has_two_sided != r.unit[x])
            return fail("unit mask wrong at " + r.names[x]);
        if (r.unit[x] &&
            (r.mul(elem(x), r.inv[x]) != r.one || r.mul(r.inv[x], elem(x)) != r.one))
            return fail("inverse table wrong at " + r.names[x]);
    }
    return true;
}

}  // namespace ringline
