#ifndef LSS_CLI_HPP
#define LSS_CLI_HPP

#include <atomic>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lss/json_io.hpp"
#include "lss/verify.hpp"

namespace lss::cli {

// exit codes: 0 success, 1 verification failure, 2 input error, 3 budget exhausted
enum ExitCode { kOk = 0, kVerifyFail = 1, kInputError = 2, kBudget = 3 };

struct RunConfig {
    std::string command;  // gb | decompose | invariants | verify
    std::string graph_source;
    std::string field = "Q";
    std::string order = "default";
    std::string format = "text";  // text | json
    bool prune = true;
    bool run_verify = false;   // decompose --verify
    bool allow_large = false;  // lift the n <= 4 guard on --verify
    std::string suite = "all";
    int n_max = 0;  // 0: per-criterion defaults
    int seeds = 20;
    int jobs = 1;
    unsigned long long budget = 0;  // 0: default / LSS_BUDGET
};

namespace detail {

inline Budget resolve_budget(const RunConfig& cfg) {
    Budget b = Budget::from_env();
    if (cfg.budget > 0) {
        b.max_basis = static_cast<size_t>(cfg.budget);
        b.max_pairs = static_cast<size_t>(cfg.budget) * 100;
    }
    return b;
}

/// Accepts "default" or an explicit '>'-separated priority list naming every
/// ring variable exactly once.
inline MonomialOrder resolve_order(const RunConfig& cfg, const RingPtr& ring) {
    if (cfg.order == "default" || cfg.order.empty()) return ring->default_order();
    MonomialOrder ord;
    std::string token;
    std::istringstream in(cfg.order);
    std::vector<bool> seen(ring->total_vars(), false);
    while (std::getline(in, token, '>')) {
        size_t begin = token.find_first_not_of(" \t");
        size_t end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) throw InputError("order: empty variable name");
        std::string name = token.substr(begin, end - begin + 1);
        size_t idx = ring->find_var(name);
        if (idx == static_cast<size_t>(-1)) throw InputError("order: unknown variable '" + name + "'");
        if (seen[idx]) throw InputError("order: variable '" + name + "' repeated");
        seen[idx] = true;
        ord.priority.push_back(static_cast<int>(idx));
    }
    if (ord.priority.size() != ring->total_vars())
        throw InputError("order: must list all " + std::to_string(ring->total_vars()) +
                         " variables");
    return ord;
}

inline std::string subscript_pair(int i, int j) {
    if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

/// Paper-style label for a basis element: u*b_ij / u*g_ij for the binomial
/// types, the bare monomial otherwise.
inline std::string element_label(const GBElement& e, const RingPtr& ring) {
    if (e.kind == GBKind::TypeI || e.kind == GBKind::TypeII) {
        AdmissiblePath path{e.witnesses[0]};
        Monomial u = path.attached_monomial(ring);
        std::string core = (e.kind == GBKind::TypeI ? "b_" : "g_") +
                           subscript_pair(path.from(), path.to());
        if (u.is_one()) return core;
        std::string us =
            Polynomial::monomial(ring, u, FieldElem::one(ring->field())).to_string();
        return us + "*" + core;
    }
    return e.poly.to_string();
}

inline std::string join_path(const std::vector<int>& seq) {
    std::string s;
    for (size_t k = 0; k < seq.size(); ++k) {
        if (k) s += "-";
        s += std::to_string(seq[k]);
    }
    return s;
}

inline std::string set_string(const std::vector<int>& S) {
    std::string s = "{";
    for (size_t k = 0; k < S.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(S[k]);
    }
    return s + "}";
}

}  // namespace detail

inline int run_gb(const RunConfig& cfg, std::ostream& out) {
    Budget budget = detail::resolve_budget(cfg);
    Graph g = load_graph(cfg.graph_source);
    FieldSpec field = FieldSpec::parse(cfg.field);
    RingPtr ring = make_ring(g.vertex_count(), field);
    MonomialOrder ord = detail::resolve_order(cfg, ring);
    if (!ord.is_positional())
        throw InputError("gb: certification is tied to the standard order x1>..>xn>y1>..>yn");

    auto elements = combinatorial_gb(g, ring, cfg.prune);
    bool char2 = field.characteristic() == 2;
    GBCertificate cert;
    if (!char2) cert = gb_certify(g, ring, budget);

    if (cfg.format == "json") {
        Json j;
        j["graph"] = graph_to_json(g);
        j["field"] = field.to_string();
        Json elems = Json::array();
        for (const auto& e : elements) {
            Json je = gb_element_to_json(e);
            je["label"] = detail::element_label(e, ring);
            elems.push_back(std::move(je));
        }
        j["elements"] = std::move(elems);
        if (char2) {
            j["certification"] = {{"applicable", false},
                                  {"note", "char 2: GB theorem not applicable"}};
        } else {
            j["certification"] = {{"applicable", true},
                                  {"is_gb", cert.is_gb},
                                  {"initial_squarefree", cert.initial_squarefree},
                                  {"reduced_match", cert.reduced_match}};
        }
        out << j.dump(2) << "\n";
    } else {
        out << "permanental basis for " << g.vertex_count() << " vertices, "
            << g.edges().size() << " edges over " << field.to_string() << " ("
            << elements.size() << " elements)\n";
        for (const auto& e : elements) {
            out << "  (" << to_string(e.kind) << ") ";
            switch (e.kind) {
                case GBKind::TypeI:
                case GBKind::TypeII:
                    out << "path " << detail::join_path(e.witnesses[0]);
                    break;
                case GBKind::TypeIII:
                    out << "paths " << detail::join_path(e.witnesses[0]) << " | "
                        << detail::join_path(e.witnesses[1]);
                    break;
                case GBKind::TypeIV:
                    out << "paths " << detail::join_path(e.witnesses[0]) << " | "
                        << detail::join_path(e.witnesses[1]) << " pendant "
                        << detail::join_path(e.witnesses[2]);
                    break;
            }
            out << ": " << detail::element_label(e, ring);
            if (e.kind == GBKind::TypeI || e.kind == GBKind::TypeII)
                out << " = " << e.poly.to_string();
            out << "\n";
        }
        if (char2) {
            out << "certification skipped: char 2: GB theorem not applicable\n";
        } else {
            out << "certification: is_gb=" << (cert.is_gb ? "yes" : "no")
                << " initial_squarefree=" << (cert.initial_squarefree ? "yes" : "no")
                << " reduced_match=" << (cert.reduced_match ? "yes" : "no") << "\n";
        }
    }
    if (!char2 && !(cert.is_gb && cert.initial_squarefree && cert.reduced_match))
        return kVerifyFail;
    return kOk;
}

inline int run_decompose(const RunConfig& cfg, bool invariants_only, std::ostream& out) {
    Budget budget = detail::resolve_budget(cfg);
    Graph g = load_graph(cfg.graph_source);
    FieldSpec field = FieldSpec::parse(cfg.field);
    DecompositionReport report = classify(g, field);

    if (cfg.run_verify) {
        if (report.hypothesis_violated)
            throw InputError("decompose --verify: field has sqrt(-1); use Q or F_p with p = 3 mod 4");
        if (g.vertex_count() > 4 && !cfg.allow_large)
            throw InputError("decompose --verify: n > 4 is expensive; pass --allow-large to override");
        RingPtr ring = make_ring(g.vertex_count(), field);
        report.verified = verify_decomposition(g, ring, budget);
    }

    if (cfg.format == "json") {
        out << report_to_json(report, g).dump(2) << "\n";
    } else {
        out << "graph: n=" << report.n << ", " << g.edges().size() << " edges\n";
        out << "field: " << field.to_string() << "\n";
        out << "b (bipartite components of G): " << report.b << "\n";
        if (report.hypothesis_violated) {
            out << "hypothesis violated: sqrt(-1) lies in " << field.to_string()
                << "; minimal primes / dim / unmixed / prime verdicts are theorems only for "
                << "sqrt(-1) not in K\n";
        } else {
            if (!invariants_only) {
                out << "minimal primes (" << report.minimal_primes.size()
                    << "), hypothesis sqrt(-1) not in K:\n";
                for (const auto& pc : report.minimal_primes) {
                    out << "  Q_" << detail::set_string(pc.S) << " height " << pc.height()
                        << "  components:";
                    for (const auto& c : pc.comps) {
                        out << " " << detail::set_string(c.vertices);
                        if (c.is_bipartite)
                            out << " bipartite [" << detail::set_string(c.blocks[0]) << "|"
                                << detail::set_string(c.blocks[1]) << "]";
                        else
                            out << " non-bipartite";
                    }
                    out << "\n";
                }
            } else {
                out << "minimal primes: " << report.minimal_primes.size() << "\n";
            }
            out << "dim(T/L_G) = " << report.dim << "\n";
            out << "unmixed: " << (report.unmixed ? "yes" : "no") << "\n";
            out << "prime: " << (report.prime ? "yes" : "no") << "\n";
        }
        out << "radical: " << (report.radical ? "yes" : "no") << " (" << report.radical_reason
            << ")\n";
        if (report.verified.has_value())
            out << "oracle decomposition check: " << (*report.verified ? "PASS" : "FAIL") << "\n";
    }
    if (report.verified.has_value() && !*report.verified) return kVerifyFail;
    return kOk;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    verify::SuiteOptions opt;
    opt.budget = detail::resolve_budget(cfg);
    if (cfg.n_max > 0) {
        opt.n_max_ik = cfg.n_max;
        opt.n_max_gb = cfg.n_max;
        opt.n_max_decomp = cfg.n_max;
        opt.n_max_dim = cfg.n_max;
        opt.n_max_prime = cfg.n_max;
        opt.n_max_variety = cfg.n_max;
    }
    opt.seeds = cfg.seeds;

    // fan out across criteria; results are printed in criterion order
    std::vector<std::function<verify::CriterionResult()>> tasks;
    bool all = cfg.suite == "all";
    if (all || cfg.suite == "ikn") {
        tasks.push_back([&] { return verify::quadratic_gb(opt.n_max_ik, opt.budget); });
        tasks.push_back([&] { return verify::heights(opt.n_max_ik, opt.budget); });
        tasks.push_back([&] { return verify::nonzerodivisors(opt.budget); });
        tasks.push_back([&] { return verify::ikn_trichotomy(opt.budget); });
    }
    if (all || cfg.suite == "gb") {
        tasks.push_back([&] { return verify::groebner_radical(opt.n_max_gb, opt.budget); });
        tasks.push_back([&] { return verify::phi_equivalence(opt.n_max_gb, opt.budget); });
    }
    if (all || cfg.suite == "char2")
        tasks.push_back([&] { return verify::char2_dichotomy(opt.budget); });
    if (all || cfg.suite == "decomp") {
        tasks.push_back([&] { return verify::decomposition(opt.budget); });
        tasks.push_back([&] { return verify::minimal_primes_check(opt.n_max_decomp, opt.budget); });
        tasks.push_back([&] { return verify::containment_criterion(opt.n_max_decomp, opt.budget); });
        tasks.push_back([&] { return verify::dimension(opt.n_max_dim); });
        tasks.push_back([&] { return verify::unmixedness_tables(); });
        tasks.push_back([&] { return verify::primeness(opt.n_max_prime); });
    }
    if (all || cfg.suite == "variety")
        tasks.push_back([&] { return verify::variety(opt.n_max_variety, opt.seeds); });
    if (tasks.empty()) throw InputError("verify: unknown suite '" + cfg.suite + "'");

    std::vector<verify::CriterionResult> results(tasks.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    results[i] = tasks[i]();
            });
        for (auto& t : workers) t.join();
    }

    bool all_pass = true;
    if (cfg.format == "json") {
        Json j = Json::array();
        for (const auto& r : results) {
            j.push_back({{"criterion", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.name
                 << " (" << r.detail << ")\n";
            out << line.str();
            all_pass = all_pass && r.pass;
        }
        out << (all_pass ? "all criteria passed" : "criteria FAILED") << "\n";
    }
    return all_pass ? kOk : kVerifyFail;
}

inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "gb") return run_gb(cfg, out);
        if (cfg.command == "decompose") return run_decompose(cfg, false, out);
        if (cfg.command == "invariants") return run_decompose(cfg, true, out);
        if (cfg.command == "verify") return run_verify(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kInputError;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace lss::cli

#endif
