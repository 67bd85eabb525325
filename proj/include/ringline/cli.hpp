#pragma once

// Command line front end. Exit codes: 0 success / all checks pass,
// 1 failed checks or data-level errors, 2 usage or descriptor errors.
//
// Output is byte-identical across identical invocations: orderings are
// canonical and timing information is only emitted on request.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringline/export.hpp"
#include "ringline/verify.hpp"

namespace ringline {

namespace detail {

inline elem parse_elem(const Ring& r, const std::string& tok) {
    for (int i = 0; i < r.n; ++i)
        if (r.names[i] == tok) return elem(i);
    if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char ch) {
            return std::isdigit(ch);
        })) {
        long v = std::stol(tok);
        if (v >= 0 && v < r.n) return elem(v);
    }
    throw error("unknown element '" + tok + "' of " + r.name);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline void print_report(std::ostream& os, const VerificationReport& r, bool timings) {
    os << "[" << r.suite << "] " << r.descriptor << "\n";
    int passed = 0;
    for (const auto& chk : r.checks) {
        os << "  " << (chk.pass ? "PASS" : "FAIL") << "  " << chk.name;
        if (!chk.pass) os << "  -- " << chk.witness;
        else if (!chk.witness.empty()) os << "  (" << chk.witness << ")";
        os << "\n";
        passed += chk.pass;
    }
    os << "  " << passed << "/" << r.checks.size() << " passed";
    if (timings) os << " in " << r.elapsed_ms << " ms";
    os << "\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite ring projective lines, radical parallelism and parabola models"};
    app.require_subcommand(1);
    app.footer(
        "Examples:\n"
        "  ringline ring info 'dual(gf(3))'\n"
        "  ringline projline graph 'dual(gf(2))' --format dot\n"
        "  ringline parallelism 'upper2(gf(3))' --json\n"
        "  ringline trafo apply 'dual(gf(3))@gf(3)' --matrix 1,0,1,1 --z 1\n"
        "  ringline model lines --example dual --field 'gf(3)' --t 1\n"
        "  ringline verify all --max-size 27 --jobs 4");
    int max_size = kDefaultMaxRingSize;
    app.add_option("--max-ring-size", max_size, "construction size bound")
        ->default_val(kDefaultMaxRingSize);

    // ring info <descriptor>
    auto* ring_cmd = app.add_subcommand("ring", "ring inspection");
    ring_cmd->require_subcommand(1);
    auto* ring_info = ring_cmd->add_subcommand("info", "size, units, radical, locality");
    std::string ring_desc;
    ring_info->add_option("descriptor", ring_desc, "ring descriptor, e.g. dual(gf(3))")
        ->required();

    // projline enumerate|graph <descriptor>
    auto* pl_cmd = app.add_subcommand("projline", "projective line");
    pl_cmd->require_subcommand(1);
    auto* pl_enum = pl_cmd->add_subcommand("enumerate", "list the points");
    std::string pl_desc;
    pl_enum->add_option("descriptor", pl_desc)->required();
    auto* pl_graph = pl_cmd->add_subcommand("graph", "export the distant graph");
    std::string pl_graph_desc, pl_format = "dot";
    pl_graph->add_option("descriptor", pl_graph_desc)->required();
    pl_graph->add_option("--format", pl_format, "dot or json")->default_val("dot");

    // parallelism <descriptor> [--json]
    auto* par_cmd = app.add_subcommand("parallelism", "parallel classes and the locality verdict");
    std::string par_desc;
    bool par_json = false;
    par_cmd->add_option("descriptor", par_desc)->required();
    par_cmd->add_flag("--json", par_json);

    // trafo apply <algebra> --matrix a,b,c,d --z <elem>
    auto* tr_cmd = app.add_subcommand("trafo", "induced transformations");
    tr_cmd->require_subcommand(1);
    auto* tr_apply = tr_cmd->add_subcommand("apply", "apply an induced map to an element");
    std::string tr_desc, tr_matrix, tr_z;
    tr_apply->add_option("algebra", tr_desc, "algebra descriptor, e.g. dual(gf(3))@gf(3)")
        ->required();
    tr_apply->add_option("--matrix", tr_matrix, "entries a,b,c,d by name or index")->required();
    tr_apply->add_option("--z", tr_z, "element by name or index")->required();

    // groups <algebra>
    auto* gr_cmd = app.add_subcommand("groups", "the B, T, N groups and their laws");
    std::string gr_desc;
    gr_cmd->add_option("algebra", gr_desc)->required();

    // model lines|figures
    auto* mo_cmd = app.add_subcommand("model", "parabola models");
    mo_cmd->require_subcommand(1);
    auto* mo_lines = mo_cmd->add_subcommand("lines", "the transported line family");
    std::string mo_example = "dual", mo_field = "gf(3)", mo_t = "1";
    bool mo_json = false;
    mo_lines->add_option("--example", mo_example, "dual or ternion")->default_val("dual");
    mo_lines->add_option("--field", mo_field, "field descriptor gf(q)")->default_val("gf(3)");
    mo_lines->add_option("--t", mo_t, "nonzero field scalar")->default_val("1");
    mo_lines->add_flag("--json", mo_json);
    auto* mo_fig = mo_cmd->add_subcommand("figures", "real-valued curve samples as CSV");
    std::string fig_example = "dual", fig_range = "-2:2:0.25", fig_out;
    double fig_t = 1.0;
    mo_fig->add_option("--example", fig_example, "dual or ternion")->default_val("dual");
    mo_fig->add_option("--t", fig_t, "real parameter")->default_val(1.0);
    mo_fig->add_option("--range", fig_range, "a:b:step")->default_val("-2:2:0.25");
    mo_fig->add_option("--out", fig_out, "output path")->required();

    // verify ...
    auto* ve_cmd = app.add_subcommand("verify", "run verification suites");
    ve_cmd->require_subcommand(1);
    bool ve_json = false, ve_timings = false;
    int ve_max = 27, ve_jobs = 1;
    auto* ve_all = ve_cmd->add_subcommand("all", "every suite over the catalog");
    ve_all->add_option("--max-size", ve_max, "largest ring size")->default_val(27);
    ve_all->add_option("--jobs", ve_jobs, "parallel workers")->default_val(1);
    ve_all->add_flag("--json", ve_json);
    ve_all->add_flag("--timings", ve_timings, "include elapsed times (non-reproducible output)");
    std::string ve_desc;
    auto* ve_ring = ve_cmd->add_subcommand("ring", "ring suite");
    ve_ring->add_option("descriptor", ve_desc)->required();
    auto* ve_pl = ve_cmd->add_subcommand("projline", "projective line suite");
    ve_pl->add_option("descriptor", ve_desc)->required();
    auto* ve_par = ve_cmd->add_subcommand("parallelism", "parallelism suite");
    ve_par->add_option("descriptor", ve_desc)->required();
    auto* ve_tr = ve_cmd->add_subcommand("trafo", "transformation suite");
    ve_tr->add_option("algebra", ve_desc)->required();
    auto* ve_mo = ve_cmd->add_subcommand("models", "model suite");
    ve_mo->add_option("algebra", ve_desc)->required();
    for (auto* sc : {ve_ring, ve_pl, ve_par, ve_tr, ve_mo}) {
        sc->add_flag("--json", ve_json);
        sc->add_flag("--timings", ve_timings);
    }

    std::vector<const char*> argv;
    argv.push_back("ringline");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*ring_info) {
            RingPtr r = parse_ring(ring_desc, max_size);
            Ideal rad = jacobson_radical(*r);
            out << "ring: " << r->name << "\n";
            out << "size: " << r->n << "\n";
            out << "zero: " << r->names[r->zero] << "  one: " << r->names[r->one] << "\n";
            out << "units: " << detail::set_desc(*r, r->unit_list) << "  (#"
                << r->unit_count() << ")\n";
            out << "radical: " << detail::set_desc(*r, rad.members) << "  (#" << rad.size()
                << ")\n";
            out << "nil exponent: " << nil_exponent(*r) << "\n";
            out << "local: " << (is_local_ring(*r) ? "true" : "false") << "\n";
            return 0;
        }

        if (*pl_enum) {
            RingPtr r = parse_ring(pl_desc, max_size);
            ProjectiveLine line = enumerate_points(r);
            out << "ring: " << r->name << "\n";
            out << "points: " << line.size() << "\n";
            for (int p = 0; p < line.size(); ++p)
                out << "  " << p << ": " << line.label(p) << "  (orbit size "
                    << line.points[p].orbit.size() << ")\n";
            return 0;
        }

        if (*pl_graph) {
            RingPtr r = parse_ring(pl_graph_desc, max_size);
            ProjectiveLine line = enumerate_points(r);
            DistantGraph g = distant_graph(line);
            if (pl_format == "dot") {
                out << graph_to_dot(line, g);
            } else if (pl_format == "json") {
                out << graph_to_json(line, g).dump(2) << "\n";
            } else {
                err << "usage error: unknown format '" << pl_format << "'\n";
                return 2;
            }
            return 0;
        }

        if (*par_cmd) {
            RingPtr r = parse_ring(par_desc, max_size);
            ProjectiveLine line = enumerate_points(r);
            DistantGraph g = distant_graph(line);
            ParallelismReport rep = parallel_classes(line, g);
            if (par_json) {
                out << parallelism_report_to_json(line, rep).dump(2) << "\n";
            } else {
                out << "ring: " << rep.ring_name << "\n";
                out << "points: " << rep.point_count << "\n";
                out << "radical size: " << rep.radical_size << "\n";
                out << "classes: " << rep.classes.size() << " of size " << rep.class_size
                    << (rep.classes_uniform ? "" : " (non-uniform!)") << "\n";
                out << "equivalence relation: " << (rep.equivalence ? "yes" : "no") << "\n";
                out << "neighbourhood inclusion never proper: " << (rep.equivalence ? "yes" : "no")
                    << "\n";
                out << "parallel = non-distant: "
                    << (rep.relation_equal_to_nondistant ? "yes" : "no") << "\n";
                out << "local ring: " << (rep.is_local ? "yes" : "no") << "\n";
                if (rep.witness)
                    out << "witness (non-distant, non-parallel): "
                        << line.label(rep.witness->first) << ", " << line.label(rep.witness->second)
                        << "\n";
            }
            bool consistent = rep.equivalence && rep.classes_uniform &&
                              rep.class_size == rep.radical_size &&
                              rep.relation_equal_to_nondistant == rep.is_local;
            return consistent ? 0 : 1;
        }

        if (*tr_apply) {
            AlgebraPtr a = parse_algebra(tr_desc, max_size);
            auto toks = detail::split(tr_matrix, ',');
            if (toks.size() != 4) {
                err << "usage error: --matrix needs four entries\n";
                return 2;
            }
            Matrix2 m{&a->R(), detail::parse_elem(a->R(), toks[0]),
                      detail::parse_elem(a->R(), toks[1]), detail::parse_elem(a->R(), toks[2]),
                      detail::parse_elem(a->R(), toks[3])};
            elem z = detail::parse_elem(a->R(), tr_z);
            TransformDescriptor t = induced_transform(*a, m);
            out << "algebra: " << algebra_descriptor(*a) << "\n";
            out << "matrix: [" << a->R().names[m.a] << "," << a->R().names[m.b] << ";"
                << a->R().names[m.c] << "," << a->R().names[m.d] << "]\n";
            out << "domain: " << t.domain.size() << " of " << a->R().n << " elements\n";
            if (!t.in_domain[z]) {
                err << a->R().names[z] << " lies outside the domain\n";
                return 1;
            }
            out << "gamma'(" << a->R().names[z] << ") = " << a->R().names[t.image[z]] << "\n";
            return 0;
        }

        if (*gr_cmd) {
            AlgebraPtr ap = parse_algebra(gr_desc, max_size);
            const KAlgebra& a = *ap;
            MatrixGroup B = group_B(a), T = group_T(a), N = group_N(a);
            bool b_comm = true, n_comm = true, nb_comm = true, bcb = true;
            for (const auto& x : B.members)
                for (const auto& y : B.members)
                    if (!mat_eq(mat_mul(x, y), mat_mul(y, x))) b_comm = false;
            for (const auto& x : N.members)
                for (const auto& y : N.members)
                    if (!mat_eq(mat_mul(x, y), mat_mul(y, x))) n_comm = false;
            for (const auto& x : N.members)
                for (const auto& y : B.members)
                    if (!commutes(a, x, y)) nb_comm = false;
            for (elem cc : a.ann_rad)
                for (elem b : a.rad.members)
                    if (!tau_fixes(a, cc, b)) bcb = false;
            out << "algebra: " << algebra_descriptor(a) << "\n";
            out << "|B| = " << B.members.size() << "  |T| = " << T.members.size()
                << "  |N| = " << N.members.size() << "\n";
            out << "B commutative: " << (b_comm ? "yes" : "no") << "\n";
            out << "N commutative: " << (n_comm ? "yes" : "no") << "\n";
            out << "N commutes with B: " << (nb_comm ? "yes" : "no") << " ("
                << B.members.size() * N.members.size() << " pairs)\n";
            out << "annihilator translations fix the parallel class: " << (bcb ? "yes" : "no")
                << "\n";
            return (b_comm && n_comm && nb_comm && bcb) ? 0 : 1;
        }

        if (*mo_lines) {
            if (mo_example != "dual" && mo_example != "ternion") {
                err << "usage error: --example must be dual or ternion\n";
                return 2;
            }
            std::string ring_part =
                (mo_example == "dual" ? "dual(" : "upper2(") + mo_field + ")";
            AlgebraPtr a = parse_algebra(ring_part + "@" + mo_field, max_size);
            elem t = detail::parse_elem(a->K(), mo_t);
            ModelLineSet mls = model_line_set(*a, t);
            if (mo_json) {
                nlohmann::json j;
                j["schema"] = 1;
                j["algebra"] = mls.algebra;
                j["field"] = mls.field;
                j["t"] = a->K().names[mls.t];
                j["lines"] = nlohmann::json::array();
                for (const auto& l : mls.lines) {
                    nlohmann::json jl;
                    jl["tag"] = to_string(l.tag);
                    jl["points"] = nlohmann::json::array();
                    for (elem z : l.points) jl["points"].push_back(a->R().names[z]);
                    j["lines"].push_back(jl);
                }
                out << j.dump(2) << "\n";
            } else {
                out << "algebra: " << mls.algebra << "  t = " << a->K().names[mls.t] << "\n";
                out << "lines: " << mls.lines.size() << "\n";
                for (const auto& l : mls.lines) {
                    out << "  [" << to_string(l.tag) << "] {";
                    for (std::size_t i = 0; i < l.points.size(); ++i) {
                        if (i) out << ", ";
                        out << a->R().names[l.points[i]];
                    }
                    out << "}\n";
                }
            }
            return 0;
        }

        if (*mo_fig) {
            FigureRange range = parse_range(fig_range);
            std::ofstream f(fig_out);
            if (!f) {
                err << "cannot open '" << fig_out << "' for writing\n";
                return 1;
            }
            export_figure_data(f, fig_example, fig_t, range);
            out << "wrote " << fig_out << "\n";
            return 0;
        }

        if (*ve_cmd) {
            std::uint64_t seed = env_seed();
            std::vector<VerificationReport> reports;
            if (*ve_all) {
                reports = verify_all(ve_max, ve_jobs, seed);
            } else if (*ve_ring) {
                reports.push_back(suite_ring(parse_ring(ve_desc, max_size)));
            } else if (*ve_pl) {
                reports.push_back(suite_projline(parse_ring(ve_desc, max_size), seed));
            } else if (*ve_par) {
                reports.push_back(suite_parallelism(parse_ring(ve_desc, max_size), seed));
            } else if (*ve_tr) {
                reports.push_back(suite_trafo(parse_algebra(ve_desc, max_size), seed));
            } else if (*ve_mo) {
                reports.push_back(suite_models(parse_algebra(ve_desc, max_size)));
            }
            bool all = true;
            long long checks = 0;
            for (const auto& r : reports) {
                all = all && r.all_pass();
                checks += (long long)r.checks.size();
            }
            if (ve_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : reports) {
                    nlohmann::json jr = report_to_json(r);
                    if (!ve_timings) jr.erase("elapsed_ms");
                    j.push_back(jr);
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& r : reports) detail::print_report(out, r, ve_timings);
                out << (all ? "OK" : "FAILED") << ": " << reports.size() << " suites, " << checks
                    << " checks\n";
            }
            return all ? 0 : 1;
        }
    } catch (const parse_error& e) {
        err << "descriptor error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no command\n";
    return 2;
}

}  // namespace ringline
