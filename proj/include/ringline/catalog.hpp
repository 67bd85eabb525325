#pragma once

// The ring catalog and its descriptor grammar.
//
//   zmod(n)            integers mod n, 2 <= n <= 256
//   gf(p), gf(4), gf4  fields: primes p <= 13 plus the four-element field
//   dual(K)            K[e], e^2 = 0
//   anormal(K)         K + Kj, j^2 = 1
//   trunc(K,n)         K[x]/(x^n), 2 <= n <= 4
//   upper2(K)          upper triangular 2x2 matrices over K
//   mat2(gf(2))        full 2x2 matrices over gf(2)
//   product(R1,R2)     direct product
//   quotient(R,rad)    quotient by the radical, or by {i,j,...} (element indices)
//
// K ranges over the field entries. Constructions that take K record the
// scalar embedding and a K-basis on the resulting ring.

#include <cctype>
#include <string>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

inline bool is_field(const Ring& r) {
    for (int x = 0; x < r.n; ++x) {
        if (elem(x) != r.zero && !r.unit[x]) return false;
        for (int y = 0; y < r.n; ++y)
            if (r.mul(elem(x), elem(y)) != r.mul(elem(y), elem(x))) return false;
    }
    return true;
}

namespace detail {

inline void require_field(const RingPtr& K, const char* where) {
    if (!is_field(*K)) throw error(std::string(where) + " requires a field argument");
}

/// Renders sum_i coeff[i] * sym[i] over K; an empty symbol stands for 1.
inline std::string combo_name(const Ring& K, std::span<const elem> coeffs,
                              std::span<const std::string> syms) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == K.zero) continue;
        std::string c = K.names[coeffs[i]];
        std::string term;
        if (syms[i].empty()) {
            term = c;
        } else if (coeffs[i] == K.one) {
            term = syms[i];
        } else if (c.find('+') != std::string::npos) {
            term = "(" + c + ")" + syms[i];
        } else {
            term = c + syms[i];
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? K.names[K.zero] : out;
}

}  // namespace detail

inline RingPtr make_zmod(int n) {
    if (n < 2 || n > 256) throw error("zmod(n) requires 2 <= n <= 256");
    Ring r;
    r.name = "zmod(" + std::to_string(n) + ")";
    r.n = n;
    r.zero = 0;
    r.one = 1;
    r.add_table.resize(std::size_t(n) * n);
    r.mul_table.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            r.add_table[std::size_t(x) * n + y] = elem((x + y) % n);
            r.mul_table[std::size_t(x) * n + y] = elem((x * y) % n);
        }
    return detail::seal_ring(std::move(r));
}

inline RingPtr make_gf4() {
    // {0, 1, w, w+1} with w^2 = w + 1; addition is componentwise over gf(2).
    Ring r;
    r.name = "gf(4)";
    r.n = 4;
    r.zero = 0;
    r.one = 1;
    r.names = {"0", "1", "w", "w+1"};
    r.add_table.resize(16);
    r.mul_table.resize(16);
    auto mul1 = [](int x, int y) {
        // multiply as polynomials in w mod w^2 + w + 1 over gf(2)
        int a0 = x & 1, a1 = x >> 1, b0 = y & 1, b1 = y >> 1;
        int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
        c0 = (c0 + c2) & 1;  // w^2 = w + 1
        c1 = (c1 + c2) & 1;
        return c0 | (c1 << 1);
    };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            r.add_table[std::size_t(x) * 4 + y] = elem(x ^ y);
            r.mul_table[std::size_t(x) * 4 + y] = elem(mul1(x, y));
        }
    r.scalars = ScalarStructure{"gf(2)", {0, 1}, {1, 2}};
    return detail::seal_ring(std::move(r));
}

inline RingPtr make_gf(int q) {
    if (q == 4) return make_gf4();
    bool prime = q >= 2;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
    if (!prime || q > 13) throw error("gf(q) requires a prime q <= 13 or q = 4");
    Ring r;
    r.name = "gf(" + std::to_string(q) + ")";
    r.n = q;
    r.zero = 0;
    r.one = 1;
    r.add_table.resize(std::size_t(q) * q);
    r.mul_table.resize(std::size_t(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            r.add_table[std::size_t(x) * q + y] = elem((x + y) % q);
            r.mul_table[std::size_t(x) * q + y] = elem((x * y) % q);
        }
    return detail::seal_ring(std::move(r));
}

/// K[e] with e^2 = 0. Element a + b*e has index a + |K|*b.
inline RingPtr make_dual(const RingPtr& K) {
    detail::require_field(K, "dual");
    const Ring& k = *K;
    const int q = k.n, n = q * q;
    Ring r;
    r.name = "dual(" + k.name + ")";
    r.n = n;
    auto idx = [&](elem a, elem b) { return elem(int(a) + q * int(b)); };
    r.zero = idx(k.zero, k.zero);
    r.one = idx(k.one, k.zero);
    r.add_table.resize(std::size_t(n) * n);
    r.mul_table.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            elem a = elem(x % q), b = elem(x / q), c = elem(y % q), d = elem(y / q);
            r.add_table[std::size_t(x) * n + y] = idx(k.add(a, c), k.add(b, d));
            r.mul_table[std::size_t(x) * n + y] =
                idx(k.mul(a, c), k.add(k.mul(a, d), k.mul(b, c)));
        }
    const std::string syms[] = {"", "e"};
    r.names.resize(n);
    for (int x = 0; x < n; ++x) {
        elem co[] = {elem(x % q), elem(x / q)};
        r.names[x] = detail::combo_name(k, co, syms);
    }
    ScalarStructure s{k.name, {}, {r.one, idx(k.zero, k.one)}};
    s.embed.resize(q);
    for (int a = 0; a < q; ++a) s.embed[a] = idx(elem(a), k.zero);
    r.scalars = std::move(s);
    return detail::seal_ring(std::move(r));
}

/// K + Kj with j^2 = 1. Element a + b*j has index a + |K|*b.
inline RingPtr make_anormal(const RingPtr& K) {
    detail::require_field(K, "anormal");
    const Ring& k = *K;
    const int q = k.n, n = q * q;
    Ring r;
    r.name = "anormal(" + k.name + ")";
    r.n = n;
    auto idx = [&](elem a, elem b) { return elem(int(a) + q * int(b)); };
    r.zero = idx(k.zero, k.zero);
    r.one = idx(k.one, k.zero);
    r.add_table.resize(std::size_t(n) * n);
    r.mul_table.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            elem a = elem(x % q), b = elem(x / q), c = elem(y % q), d = elem(y / q);
            r.add_table[std::size_t(x) * n + y] = idx(k.add(a, c), k.add(b, d));
            r.mul_table[std::size_t(x) * n + y] =
                idx(k.add(k.mul(a, c), k.mul(b, d)), k.add(k.mul(a, d), k.mul(b, c)));
        }
    const std::string syms[] = {"", "j"};
    r.names.resize(n);
    for (int x = 0; x < n; ++x) {
        elem co[] = {elem(x % q), elem(x / q)};
        r.names[x] = detail::combo_name(k, co, syms);
    }
    ScalarStructure s{k.name, {}, {r.one, idx(k.zero, k.one)}};
    s.embed.resize(q);
    for (int a = 0; a < q; ++a) s.embed[a] = idx(elem(a), k.zero);
    r.scalars = std::move(s);
    return detail::seal_ring(std::move(r));
}

/// K[x]/(x^deg). Coefficient vector (a_0, ..., a_{deg-1}) in mixed radix |K|.
inline RingPtr make_trunc(const RingPtr& K, int deg, int max_size = kDefaultMaxRingSize) {
    detail::require_field(K, "trunc");
    if (deg < 2 || deg > 4) throw error("trunc(K,n) requires 2 <= n <= 4");
    const Ring& k = *K;
    const int q = k.n;
    long long nn = 1;
    for (int i = 0; i < deg; ++i) nn *= q;
    if (nn > max_size) throw error("trunc ring size exceeds the configured bound");
    const int n = int(nn);
    auto digits = [&](int x) {
        std::vector<elem> d(deg);
        for (int i = 0; i < deg; ++i) d[i] = elem(x % q), x /= q;
        return d;
    };
    auto index_of = [&](const std::vector<elem>& d) {
        int x = 0;
        for (int i = deg - 1; i >= 0; --i) x = x * q + int(d[i]);
        return elem(x);
    };
    Ring r;
    r.name = "trunc(" + k.name + "," + std::to_string(deg) + ")";
    r.n = n;
    r.add_table.resize(std::size_t(n) * n);
    r.mul_table.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x) {
        auto dx = digits(x);
        for (int y = 0; y < n; ++y) {
            auto dy = digits(y);
            std::vector<elem> sum(deg), prod(deg, k.zero);
            for (int i = 0; i < deg; ++i) sum[i] = k.add(dx[i], dy[i]);
            for (int i = 0; i < deg; ++i)
                for (int j = 0; i + j < deg; ++j)
                    prod[i + j] = k.add(prod[i + j], k.mul(dx[i], dy[j]));
            r.add_table[std::size_t(x) * n + y] = index_of(sum);
            r.mul_table[std::size_t(x) * n + y] = index_of(prod);
        }
    }
    std::vector<std::string> syms(deg);
    for (int i = 1; i < deg; ++i) syms[i] = i == 1 ? "x" : "x^" + std::to_string(i);
    r.names.resize(n);
    for (int x = 0; x < n; ++x) r.names[x] = detail::combo_name(k, digits(x), syms);
    std::vector<elem> one_d(deg, k.zero);
    one_d[0] = k.one;
    r.zero = 0;
    r.one = index_of(one_d);
    ScalarStructure s{k.name, {}, {}};
    s.embed.resize(q);
    for (int a = 0; a < q; ++a) {
        std::vector<elem> d(deg, k.zero);
        d[0] = elem(a);
        s.embed[a] = index_of(d);
    }
    for (int i = 0; i < deg; ++i) {
        std::vector<elem> d(deg, k.zero);
        d[i] = k.one;
        s.basis.push_back(index_of(d));
    }
    r.scalars = std::move(s);
    return detail::seal_ring(std::move(r));
}

/// Upper triangular 2x2 matrices over K with basis j1, j2, e:
/// z1*j1 + z2*j2 + z3*e  <->  [[z1, z3], [0, z2]], index z1 + q*z2 + q^2*z3.
inline RingPtr make_upper2(const RingPtr& K) {
    detail::require_field(K, "upper2");
    const Ring& k = *K;
    const int q = k.n, n = q * q * q;
    auto idx = [&](elem a, elem b, elem c) { return elem(int(a) + q * int(b) + q * q * int(c)); };
    Ring r;
    r.name = "upper2(" + k.name + ")";
    r.n = n;
    r.zero = idx(k.zero, k.zero, k.zero);
    r.one = idx(k.one, k.one, k.zero);
    r.add_table.resize(std::size_t(n) * n);
    r.mul_table.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x) {
        elem x1 = elem(x % q), x2 = elem((x / q) % q), x3 = elem(x / (q * q));
        for (int y = 0; y < n; ++y) {
            elem y1 = elem(y % q), y2 = elem((y / q) % q), y3 = elem(y / (q * q));
            r.add_table[std::size_t(x) * n + y] = idx(k.add(x1, y1), k.add(x2, y2), k.add(x3, y3));
            r.mul_table[std::size_t(x) * n + y] =
                idx(k.mul(x1, y1), k.mul(x2, y2), k.add(k.mul(x1, y3), k.mul(x3, y2)));
        }
    }
    const std::string syms[] = {"j1", "j2", "e"};
    r.names.resize(n);
    for (int x = 0; x < n; ++x) {
        elem co[] = {elem(x % q), elem((x / q) % q), elem(x / (q * q))};
        r.names[x] = detail::combo_name(k, co, syms);
    }
    ScalarStructure s{k.name, {}, {idx(k.one, k.zero, k.zero), idx(k.zero, k.one, k.zero),
                                   idx(k.zero, k.zero, k.one)}};
    s.embed.resize(q);
    for (int a = 0; a < q; ++a) s.embed[a] = idx(elem(a), elem(a), k.zero);
    r.scalars = std::move(s);
    return detail::seal_ring(std::move(r));
}

/// Full 2x2 matrices over gf(2); [[a,b],[c,d]] has index a + 2b + 4c + 8d.
inline RingPtr make_mat2_gf2() {
    Ring r;
    r.name = "mat2(gf(2))";
    r.n = 16;
    r.zero = 0;
    r.one = 9;
    r.add_table.resize(256);
    r.mul_table.resize(256);
    for (int x = 0; x < 16; ++x) {
        int a = x & 1, b = (x >> 1) & 1, c = (x >> 2) & 1, d = (x >> 3) & 1;
        for (int y = 0; y < 16; ++y) {
            int e = y & 1, f = (y >> 1) & 1, g = (y >> 2) & 1, h = (y >> 3) & 1;
            r.add_table[std::size_t(x) * 16 + y] = elem(x ^ y);
            int pa = (a * e + b * g) & 1, pb = (a * f + b * h) & 1;
            int pc = (c * e + d * g) & 1, pd = (c * f + d * h) & 1;
            r.mul_table[std::size_t(x) * 16 + y] = elem(pa | (pb << 1) | (pc << 2) | (pd << 3));
        }
    }
    r.names.resize(16);
    const char* syms[] = {"e11", "e12", "e21", "e22"};
    for (int x = 0; x < 16; ++x) {
        std::string s;
        for (int bit = 0; bit < 4; ++bit)
            if (x & (1 << bit)) {
                if (!s.empty()) s += "+";
                s += syms[bit];
            }
        r.names[x] = s.empty() ? "0" : s;
    }
    r.scalars = ScalarStructure{"gf(2)", {0, 9}, {1, 2, 4, 8}};
    return detail::seal_ring(std::move(r));
}

inline RingPtr make_product(const RingPtr& A, const RingPtr& B,
                            int max_size = kDefaultMaxRingSize) {
    const Ring& a = *A;
    const Ring& b = *B;
    long long nn = (long long)a.n * b.n;
    if (nn > max_size) throw error("product ring size exceeds the configured bound");
    const int n = int(nn);
    Ring r;
    r.name = "product(" + a.name + "," + b.name + ")";
    r.n = n;
    auto idx = [&](elem x, elem y) { return elem(int(x) * b.n + int(y)); };
    r.zero = idx(a.zero, b.zero);
    r.one = idx(a.one, b.one);
    r.add_table.resize(std::size_t(n) * n);
    r.mul_table.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x) {
        elem xa = elem(x / b.n), xb = elem(x % b.n);
        for (int y = 0; y < n; ++y) {
            elem ya = elem(y / b.n), yb = elem(y % b.n);
            r.add_table[std::size_t(x) * n + y] = idx(a.add(xa, ya), b.add(xb, yb));
            r.mul_table[std::size_t(x) * n + y] = idx(a.mul(xa, ya), b.mul(xb, yb));
        }
    }
    r.names.resize(n);
    for (int x = 0; x < n; ++x)
        r.names[x] = "(" + a.names[x / b.n] + "," + b.names[x % b.n] + ")";
    return detail::seal_ring(std::move(r));
}

namespace detail {

struct DescriptorParser {
    const std::string& s;
    std::size_t pos = 0;
    int max_size;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw parse_error("expected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos) + " in ring descriptor");
    }

    int number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a number at position " + std::to_string(pos));
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1'000'000) throw parse_error("number too large in ring descriptor");
        }
        return int(v);
    }

    std::string word() {
        std::size_t start = pos;
        while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos;
        return s.substr(start, pos - start);
    }

    RingPtr field() {
        std::size_t save = pos;
        RingPtr k = ring();
        if (!is_field(*k) || k->name.rfind("gf(", 0) != 0)
            throw parse_error("expected a field entry gf(q) at position " + std::to_string(save));
        return k;
    }

    RingPtr ring() {
        std::string w = word();
        if (w == "zmod") {
            expect('(');
            int n = number();
            expect(')');
            return make_zmod(n);
        }
        if (w == "gf") {
            expect('(');
            int q = number();
            expect(')');
            return make_gf(q);
        }
        if (w == "gf4") return make_gf4();
        if (w == "dual") {
            expect('(');
            RingPtr k = field();
            expect(')');
            return make_dual(k);
        }
        if (w == "anormal") {
            expect('(');
            RingPtr k = field();
            expect(')');
            return make_anormal(k);
        }
        if (w == "trunc") {
            expect('(');
            RingPtr k = field();
            expect(',');
            int d = number();
            expect(')');
            return make_trunc(k, d, max_size);
        }
        if (w == "upper2") {
            expect('(');
            RingPtr k = field();
            expect(')');
            return make_upper2(k);
        }
        if (w == "mat2") {
            expect('(');
            RingPtr k = field();
            expect(')');
            if (k->n != 2) throw parse_error("mat2 is only provided over gf(2)");
            return make_mat2_gf2();
        }
        if (w == "product") {
            expect('(');
            RingPtr a = ring();
            expect(',');
            RingPtr b = ring();
            expect(')');
            return make_product(a, b, max_size);
        }
        if (w == "quotient") {
            expect('(');
            RingPtr a = ring();
            expect(',');
            Ideal I;
            if (peek() == 'r') {
                if (word() != "rad") throw parse_error("expected 'rad' or '{...}' ideal");
                I = jacobson_radical(*a);
            } else {
                expect('{');
                std::vector<elem> members;
                if (peek() != '}') {
                    members.push_back(elem(number()));
                    while (eat(',')) members.push_back(elem(number()));
                }
                expect('}');
                for (elem x : members) a->require(x);
                I = make_ideal(*a, std::move(members));
            }
            expect(')');
            return quotient_ring(a, I).first;
        }
        throw parse_error("unknown ring constructor '" + w + "'");
    }
};

}  // namespace detail

inline RingPtr parse_ring(const std::string& descriptor, int max_size = kDefaultMaxRingSize) {
    std::string cleaned;
    for (char c : descriptor)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    detail::DescriptorParser p{cleaned, 0, max_size};
    RingPtr r;
    try {
        r = p.ring();
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error("in descriptor '" + descriptor + "': " + e.what());
    }
    if (p.pos != cleaned.size())
        throw parse_error("trailing characters in ring descriptor: '" + cleaned.substr(p.pos) + "'");
    return r;
}

}  // namespace ringline
