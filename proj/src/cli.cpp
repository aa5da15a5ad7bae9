#include "springer/cli.hpp"

#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "springer/verifier.hpp"

namespace springer::cli {

namespace {

using nlohmann::json;

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int report_exit(const VerificationReport& rep, const std::string& format, std::ostream& out) {
    if (format == "json")
        print_json(out, rep.to_json());
    else
        out << rep.to_text();
    return rep.passed() ? 0 : 1;
}

struct HasseResult {
    PosetEdges edges;
    std::vector<std::string> labels;
};

int emit_hasse(const HasseResult& h, const std::string& format, json extra, std::ostream& out) {
    if (format == "dot") {
        out << emit_dot(h.edges, h.labels);
    } else if (format == "json") {
        json j = std::move(extra);
        j["elements"] = h.labels;
        json pairs = json::array();
        for (const auto& [lo, hi] : h.edges.cover_pairs) pairs.push_back({lo, hi});
        j["cover_pairs"] = std::move(pairs);
        print_json(out, j);
    } else {
        for (const auto& [lo, hi] : h.edges.cover_pairs)
            out << h.labels[lo] << " < " << h.labels[hi] << "\n";
    }
    return 0;
}

}  // namespace

std::string emit_dot(const PosetEdges& edges, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < edges.element_count; ++i)
        out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
    for (const auto& [lo, hi] : edges.cover_pairs) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of the generalized Springer correspondence for spin "
                 "groups: the bijection between X_n and bipartitions, the dominance orders "
                 "on both sides, and verification of their compatibility.",
                 "springer"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string convention_name = "t0-swap";
    Int cap = kDefaultEnumerationCap;
    app.add_option("--format", format, "Output format (default: text)")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--convention", convention_name,
                   "Pair ordering at t = 0 (default: t0-swap)")
        ->check(CLI::IsMember({"t0-swap", "t0-keep"}));
    app.add_option("--cap", cap, "Enumeration cap on weights (default: 60)");

    auto* map_cmd = app.add_subcommand("map", "Forward image of a member of X_n");
    map_cmd->fallthrough();
    std::string map_input;
    map_cmd->add_option("partition", map_input, "Partition, e.g. 9,5,3,1")->required();

    auto* invert_cmd = app.add_subcommand("invert", "Preimage of a bipartition in the fiber t");
    invert_cmd->fallthrough();
    std::string invert_input;
    Int invert_t = 0;
    invert_cmd->add_option("bipartition", invert_input, "Bipartition, e.g. 1,1/1")->required();
    invert_cmd->add_option("--t", invert_t, "Defect of the fiber")->required();

    auto* enum_xn_cmd = app.add_subcommand("enum-xn", "List the members of X_n");
    enum_xn_cmd->fallthrough();
    Int enum_xn_n = 0;
    enum_xn_cmd->add_option("n", enum_xn_n, "Weight")->required();

    auto* enum_bp_cmd = app.add_subcommand("enum-bipartitions", "List the bipartitions of m");
    enum_bp_cmd->fallthrough();
    Int enum_bp_m = 0;
    enum_bp_cmd->add_option("m", enum_bp_m, "Weight")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification check");
    verify_cmd->fallthrough();
    verify_cmd->require_subcommand(1);
    Int verify_n = 0;
    Int verify_m = 0;
    Int verify_t = 0;
    auto* v_bijection = verify_cmd->add_subcommand("bijection", "Fibers of the forward map");
    v_bijection->fallthrough();
    v_bijection->add_option("--n", verify_n, "Weight of the source")->required();
    auto* v_lemma1 = verify_cmd->add_subcommand("lemma1", "Part residues of fiber images");
    v_lemma1->fallthrough();
    v_lemma1->add_option("--m", verify_m, "Bipartition weight")->required();
    v_lemma1->add_option("--t", verify_t, "Defect (t >= m)")->required();
    auto* v_lemma2 = verify_cmd->add_subcommand("lemma2", "Closed form vs brute force");
    v_lemma2->fallthrough();
    v_lemma2->add_option("--m", verify_m, "Bipartition weight")->required();
    v_lemma2->add_option("--t", verify_t, "Defect (t >= m)")->required();
    auto* v_theorem = verify_cmd->add_subcommand("theorem", "Induced order vs dominance");
    v_theorem->fallthrough();
    v_theorem->add_option("--m", verify_m, "Bipartition weight")->required();
    v_theorem->add_option("--t", verify_t, "Defect")->required();

    auto* scan_cmd = app.add_subcommand("scan-threshold",
                                        "Theorem violation counts across a defect range");
    scan_cmd->fallthrough();
    Int scan_m = 0;
    Int scan_t_min = 0;
    Int scan_t_max = 0;
    scan_cmd->add_option("--m", scan_m, "Bipartition weight")->required();
    scan_cmd->add_option("--t-min", scan_t_min, "First defect")->required();
    scan_cmd->add_option("--t-max", scan_t_max, "Last defect")->required();

    auto* counter_cmd =
        app.add_subcommand("counterexample", "The family breaking the order at t = m - 1");
    counter_cmd->fallthrough();
    Int counter_t = 0;
    counter_cmd->add_option("--t", counter_t, "Defect (t >= 2)")->required();

    auto* hasse_cmd = app.add_subcommand("hasse", "Cover relations of a poset");
    hasse_cmd->fallthrough();
    hasse_cmd->require_subcommand(1);
    auto* h_xn = hasse_cmd->add_subcommand("xn", "X_n under dominance");
    h_xn->fallthrough();
    Int hasse_n = 0;
    h_xn->add_option("--n", hasse_n, "Weight")->required();
    auto* h_bp = hasse_cmd->add_subcommand("bipartitions", "Bipartitions of m");
    h_bp->fallthrough();
    Int hasse_m = 0;
    Int hasse_t = 0;
    auto* h_induced =
        h_bp->add_flag("--induced", "Order through the fiber at --t instead of dominance");
    auto* h_t = h_bp->add_option("--t", hasse_t, "Defect for the induced order");
    h_induced->needs(h_t);
    h_bp->add_option("--m", hasse_m, "Weight")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (format == "dot" && !hasse_cmd->parsed()) {
        err << "usage error: --format dot is only valid for hasse\n";
        return 2;
    }

    Options opts;
    opts.cap = cap;
    opts.convention =
        convention_name == "t0-keep" ? Convention::T0Keep : Convention::T0Swap;

    try {
        if (map_cmd->parsed()) {
            const Partition p = parse_partition(map_input);
            const XnElement el{p};
            const SpringerImage img = forward_map(el, opts.convention);
            if (format == "json") {
                json j;
                j["input"] = to_text(p);
                j["t"] = img.t;
                j["m"] = img.bipartition.weight();
                j["bipartition"] = to_text(img.bipartition);
                j["alpha_raw"] = img.alpha_raw;
                j["beta_raw"] = img.beta_raw;
                print_json(out, j);
            } else {
                out << "t=" << img.t << "\n";
                out << "bipartition=" << to_text(img.bipartition) << "\n";
            }
            return 0;
        }

        if (invert_cmd->parsed()) {
            const Bipartition bp = parse_bipartition(invert_input);
            std::string path;
            Partition result;
            if (invert_t >= bp.weight()) {
                result = closed_form_inverse(bp, invert_t).partition();
                path = "closed-form";
            } else {
                const auto found = brute_force_inverse(bp, invert_t, opts);
                if (!found) {
                    err << "error: no preimage of " << to_text(bp) << " in the fiber t="
                        << invert_t << "\n";
                    return 3;
                }
                result = found->partition();
                path = "brute-force";
            }
            if (format == "json") {
                json j;
                j["bipartition"] = to_text(bp);
                j["t"] = invert_t;
                j["partition"] = to_text(result);
                j["path"] = path;
                print_json(out, j);
            } else {
                out << to_text(result) << "\n";
            }
            return 0;
        }

        if (enum_xn_cmd->parsed()) {
            ensure_within_cap(enum_xn_n, opts.cap);
            if (format == "json") {
                json items = json::array();
                for_each_partition(enum_xn_n, [&](const Partition& p) {
                    if (is_in_xn(p)) items.push_back(to_text(p));
                });
                json j;
                j["n"] = enum_xn_n;
                j["count"] = items.size();
                j["items"] = std::move(items);
                print_json(out, j);
            } else {
                for_each_partition(enum_xn_n, [&](const Partition& p) {
                    if (is_in_xn(p)) out << to_text(p) << "\n";
                });
            }
            return 0;
        }

        if (enum_bp_cmd->parsed()) {
            ensure_within_cap(enum_bp_m, opts.cap);
            if (format == "json") {
                json items = json::array();
                for_each_bipartition(enum_bp_m,
                                     [&](const Bipartition& bp) { items.push_back(to_text(bp)); });
                json j;
                j["m"] = enum_bp_m;
                j["count"] = items.size();
                j["items"] = std::move(items);
                print_json(out, j);
            } else {
                for_each_bipartition(enum_bp_m,
                                     [&](const Bipartition& bp) { out << to_text(bp) << "\n"; });
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            VerificationReport rep;
            if (v_bijection->parsed())
                rep = verify_bijection(verify_n, opts);
            else if (v_lemma1->parsed())
                rep = verify_lemma1(verify_m, verify_t, opts);
            else if (v_lemma2->parsed())
                rep = verify_lemma2(verify_m, verify_t, opts);
            else
                rep = verify_theorem(verify_m, verify_t, opts);
            return report_exit(rep, format, out);
        }

        if (scan_cmd->parsed()) {
            const auto results = scan_threshold(scan_m, scan_t_min, scan_t_max, opts);
            if (format == "json") {
                json rows = json::array();
                for (const auto& [t, count] : results)
                    rows.push_back({{"t", t}, {"violations", count}});
                json j;
                j["m"] = scan_m;
                j["t_min"] = scan_t_min;
                j["t_max"] = scan_t_max;
                j["results"] = std::move(rows);
                print_json(out, j);
            } else {
                for (const auto& [t, count] : results)
                    out << "t=" << t << " violations=" << count << "\n";
            }
            return 0;
        }

        if (counter_cmd->parsed())
            return report_exit(reproduce_counterexample(counter_t, opts), format, out);

        if (hasse_cmd->parsed()) {
            HasseResult h;
            json extra;
            if (h_xn->parsed()) {
                const std::vector<XnElement> els = enumerate_xn(hasse_n, opts.cap);
                for (const XnElement& e : els) h.labels.push_back(to_text(e.partition()));
                h.edges = hasse_edges(els, [](const XnElement& a, const XnElement& b) {
                    return dominance_leq(a.partition(), b.partition());
                });
                extra["kind"] = "xn";
                extra["n"] = hasse_n;
            } else {
                const std::vector<Bipartition> els = enumerate_bipartitions(hasse_m, opts.cap);
                for (const Bipartition& e : els) h.labels.push_back(to_text(e));
                if (h_induced->count() > 0) {
                    h.edges = hasse_edges(els, [&](const Bipartition& a, const Bipartition& b) {
                        return induced_leq(a, b, hasse_t, opts);
                    });
                    extra["kind"] = "bipartitions-induced";
                    extra["t"] = hasse_t;
                } else {
                    h.edges = hasse_edges(els, [](const Bipartition& a, const Bipartition& b) {
                        return djm_leq(a, b);
                    });
                    extra["kind"] = "bipartitions";
                }
                extra["m"] = hasse_m;
            }
            return emit_hasse(h, format, std::move(extra), out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolationError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 1;
    }

    err << "usage error: no command\n";
    return 2;
}

}  // namespace springer::cli
