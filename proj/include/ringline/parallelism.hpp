#pragma once

// Radical parallelism: p is parallel to q when every point distant from p
// is distant from q. Equivalently (and checked against each other in the
// test suites): p and q project to the same point of the line over R/rad R.

#include <optional>
#include <utility>
#include <vector>

#include "ringline/projline.hpp"

namespace ringline {

inline bool is_parallel_def(const DistantGraph& g, int p, int q) {
    return g.adj.row_subset(p, q);
}

/// The line over R/rad R together with the projection of every point.
struct QuotientLine {
    RingPtr qring;
    RingHom hom;
    ProjectiveLine qline;
    std::vector<int> proj;
};

inline QuotientLine quotient_line(const ProjectiveLine& line) {
    Ideal rad = jacobson_radical(line.R());
    auto [qring, hom] = quotient_ring(line.ring, rad);
    QuotientLine q{qring, hom, enumerate_points(qring), {}};
    q.proj.resize(line.size());
    for (int p = 0; p < line.size(); ++p) q.proj[p] = project_point(line, p, q.hom, q.qline);
    return q;
}

inline bool is_parallel_quot(const QuotientLine& q, int p1, int p2) {
    return q.proj[p1] == q.proj[p2];
}

/// Local iff the nonunits are exactly the radical.
inline bool is_local_ring(const Ring& r) {
    Ideal rad = jacobson_radical(r);
    for (int x = 0; x < r.n; ++x)
        if (r.unit[x] == rad.contains(elem(x))) return false;
    return true;
}

/// True when parallelism and non-distance coincide as relations. Both hold
/// on the diagonal (the distant relation is anti-reflexive), so no special
/// casing is needed there. A non-distant, non-parallel pair is reported as
/// witness when the relations differ.
inline bool compare_relations(const ProjectiveLine& line, const DistantGraph& g,
                              std::pair<int, int>* witness = nullptr) {
    for (int p = 0; p < line.size(); ++p)
        for (int q = 0; q < line.size(); ++q) {
            bool par = is_parallel_def(g, p, q);
            bool nondist = !g.distant(p, q);
            if (par != nondist) {
                if (witness) *witness = {p, q};
                return false;
            }
        }
    return true;
}

struct ParallelismReport {
    std::string ring_name;
    int point_count = 0;
    int radical_size = 0;
    std::vector<std::vector<int>> classes;
    int class_size = 0;
    bool classes_uniform = true;
    bool equivalence = true;  // symmetry of the neighbourhood-inclusion relation
    bool relation_equal_to_nondistant = false;
    bool is_local = false;
    std::optional<std::pair<int, int>> witness;  // non-distant non-parallel pair
};

inline ParallelismReport parallel_classes(const ProjectiveLine& line, const DistantGraph& g) {
    ParallelismReport rep;
    rep.ring_name = line.R().name;
    rep.point_count = line.size();
    rep.radical_size = jacobson_radical(line.R()).size();

    // Inclusion of neighbourhoods is reflexive and transitive for free; the
    // mathematical content of being an equivalence is symmetry.
    for (int p = 0; p < line.size() && rep.equivalence; ++p)
        for (int q = 0; q < line.size(); ++q)
            if (is_parallel_def(g, p, q) != is_parallel_def(g, q, p)) {
                rep.equivalence = false;
                break;
            }

    std::vector<int> cls(line.size(), -1);
    for (int p = 0; p < line.size(); ++p) {
        if (cls[p] >= 0) continue;
        int id = int(rep.classes.size());
        rep.classes.emplace_back();
        for (int q = p; q < line.size(); ++q)
            if (cls[q] < 0 && is_parallel_def(g, p, q) && is_parallel_def(g, q, p)) {
                cls[q] = id;
                rep.classes[id].push_back(q);
            }
    }
    rep.class_size = rep.classes.empty() ? 0 : int(rep.classes.front().size());
    for (const auto& c : rep.classes)
        if (int(c.size()) != rep.class_size) rep.classes_uniform = false;

    std::pair<int, int> w;
    rep.relation_equal_to_nondistant = compare_relations(line, g, &w);
    if (!rep.relation_equal_to_nondistant) rep.witness = w;
    rep.is_local = is_local_ring(line.R());
    return rep;
}

}  // namespace ringline
