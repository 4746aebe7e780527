// ccap: exact enumeration and capacity of codes avoiding forbidden substrings.
//
// Subcommands:
//   genfun            closed-form T/S and the recurrence it induces
//   count             exact counts N(n), streamed
//   capacity          capacity with a guaranteed error bound, both methods
//   verify            cross-validation of all computation routes
//   bound-nonoverlap  Levenshtein-style bound for non-overlapping codes
//   families          materialize a constraint family as a plain word list
//
// Exit codes: 0 ok, 1 check failure or internal error, 2 bad input,
//             3 degenerate constraint set, 4 resource budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccap/json_io.hpp"

namespace {

struct CommonOpts {
    std::string input_path;
    std::string inline_spec;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    auto* input = cmd->add_option("--input", opts.input_path, "constraint spec file");
    auto* spec = cmd->add_option("--spec", opts.inline_spec, "inline constraint spec JSON");
    input->excludes(spec);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

ccap::ForbiddenSet load_spec(const CommonOpts& opts) {
    std::string text;
    if (!opts.input_path.empty()) {
        std::ifstream in(opts.input_path);
        if (!in) throw ccap::ParseError("cannot read " + opts.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else if (!opts.inline_spec.empty()) {
        text = opts.inline_spec;
    } else {
        throw ccap::ParseError("need --input or --spec");
    }
    return ccap::parse_constraint_spec(text);
}

void emit_genfun(const ccap::GenFun& f, const std::string& format) {
    if (format == "json") {
        std::cout << ccap::genfun_json(f) << "\n";
        return;
    }
    ccap::Recurrence rec = ccap::recurrence_from_genfun(f);
    std::cout << "T = " << f.T.str() << "\n";
    std::cout << "S = " << f.S.str() << "\n";
    std::cout << "recurrence: ";
    for (int i = 0; i <= rec.s(); ++i) {
        if (i) std::cout << " + ";
        std::cout << rec.a[i].get_str() << "*N(n-" << i << ")";
    }
    std::cout << " = b_n with b = [";
    for (int i = 0; i <= rec.t(); ++i) {
        if (i) std::cout << ", ";
        std::cout << rec.b[i].get_str();
    }
    std::cout << "] (b_n = 0 beyond)\n";
}

int run_genfun(const CommonOpts& opts) {
    ccap::ForbiddenSet f = reduce(load_spec(opts));
    auto res = ccap::cluster_genfun(f);
    emit_genfun(res.f, opts.format);
    return 0;
}

int run_count(const CommonOpts& opts, long n, long n_from, long n_to) {
    ccap::ForbiddenSet f = reduce(load_spec(opts));
    auto res = ccap::cluster_genfun(f);
    if (n >= 0) {
        n_from = n_to = n;
    }
    if (n_from < 0 || n_to < n_from) throw ccap::InputError("count: bad n range");
    ccap::CountStream cs(ccap::recurrence_from_genfun(res.f));
    bool json_out = opts.format == "json";
    if (json_out) std::cout << "[";
    bool first = true;
    for (long i = 0; i <= n_to; ++i) {
        ccap::BigInt v = cs.next();
        if (i < n_from) continue;
        if (json_out) {
            if (!first) std::cout << ",";
            std::cout << "{\"n\":" << i << ",\"count\":\"" << v.get_str() << "\"}";
        } else {
            std::cout << i << "\t" << v.get_str() << "\n";
        }
        first = false;
    }
    if (json_out) std::cout << "]\n";
    return 0;
}

int run_capacity(const CommonOpts& opts, double eps, size_t spectral_cap) {
    ccap::ForbiddenSet f = reduce(load_spec(opts));
    auto res = ccap::cluster_genfun(f);
    ccap::CapacityResult cluster = ccap::capacity(res.f, eps);
    if (cluster.status == ccap::CapacityStatus::degenerate) {
        std::cerr << "capacity undefined: only finitely many strings avoid this set\n";
        return 3;
    }
    bool json_out = opts.format == "json";
    std::cout << std::setprecision(10);
    if (json_out) {
        std::cout << ccap::capacity_json(cluster.estimate) << "\n";
    } else {
        std::cout << "capacity = " << cluster.estimate.value << " +/- "
                  << cluster.estimate.eps << " (cluster method)\n";
    }
    try {
        ccap::CapacityResult spectral = ccap::capacity_spectral(f, eps, spectral_cap);
        if (spectral.status == ccap::CapacityStatus::ok) {
            if (json_out) {
                std::cout << ccap::capacity_json(spectral.estimate) << "\n";
            } else {
                std::cout << "capacity = " << spectral.estimate.value << " +/- "
                          << spectral.estimate.eps << " (spectral method)\n";
            }
        }
    } catch (const ccap::ResourceError&) {
        if (!json_out) std::cout << "spectral method skipped: graph over size budget\n";
    }
    return 0;
}

int run_verify(const CommonOpts& opts, int n_max, double eps, uint64_t budget,
               size_t spectral_cap) {
    ccap::ForbiddenSet f = reduce(load_spec(opts));
    auto res = ccap::cluster_genfun(f);
    std::vector<ccap::CheckResult> results;
    results.push_back(ccap::checks::degree_bounds(f, res.f));
    results.push_back(ccap::checks::series_product(res.f, n_max + 8));
    results.push_back(ccap::checks::count_oracle(f, res.f, n_max, budget));
    results.push_back(ccap::checks::walk_counts(f, res.f, n_max));
    results.push_back(ccap::checks::det_identity(f, res.f, spectral_cap));
    results.push_back(ccap::checks::capacity_agreement(f, res.f, eps, spectral_cap));
    bool all_pass = true;
    for (const auto& r : results) {
        std::string status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::cout << status << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

int run_bound(int q, int n, bool search, size_t budget, const std::string& format) {
    ccap::BoundReport rep = ccap::levenshtein_bound(q, n);
    ccap::MaxCodeResult max_code;
    bool have_search = false;
    if (search) {
        max_code = ccap::max_variable_length_code(q, n, budget);
        have_search = true;
    }
    if (format == "json") {
        std::cout << ccap::bound_report_json(rep, have_search ? &max_code : nullptr)
                  << "\n";
    } else {
        std::cout << "bound = " << rep.bound.get_num().get_str() << "/"
                  << rep.bound.get_den().get_str() << " ~= " << rep.bound.get_d()
                  << ", floor " << rep.floor_value.get_str() << "\n";
        if (have_search) {
            std::cout << "exhaustive maximum (word lengths 2.." << n
                      << ") = " << max_code.size << ", witness {";
            for (size_t i = 0; i < max_code.witness.words.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << max_code.witness.alphabet.word_str(max_code.witness.words[i]);
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

int run_families(const CommonOpts& opts) {
    ccap::ForbiddenSet f = load_spec(opts);
    if (opts.format == "json") {
        std::cout << ccap::constraint_spec_json(f) << "\n";
    } else {
        std::cout << "q = " << f.q() << ", " << f.size() << " forbidden words:\n";
        for (const auto& w : f.words()) {
            std::cout << "  " << f.alphabet().word_str(w) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and capacity for forbidden-substring constraints"};
    app.require_subcommand(1);

    CommonOpts genfun_opts, count_opts, capacity_opts, verify_opts, families_opts;
    long n = -1, n_from = 0, n_to = -1;
    double eps = 1e-6;
    double verify_eps = 1e-9;
    int bound_q = 2, bound_n = 2, verify_nmax = 14;
    bool do_search = false;
    uint64_t budget = ccap::kDefaultEnumerationBudget;
    size_t search_budget = 512;
    size_t spectral_cap = ccap::kDefaultMaxDetVertices;
    uint64_t seed = 0;

    auto* genfun = app.add_subcommand("genfun", "closed-form generating function");
    add_common(genfun, genfun_opts);

    auto* count = app.add_subcommand("count", "exact counts N(n)");
    add_common(count, count_opts);
    count->add_option("--n", n, "single length");
    count->add_option("--n-from", n_from, "range start");
    count->add_option("--n-to", n_to, "range end");

    auto* capacity = app.add_subcommand("capacity", "capacity with guaranteed error");
    add_common(capacity, capacity_opts);
    capacity->add_option("--eps", eps, "guaranteed accuracy in (0,1)");
    capacity->add_option("--spectral-cap", spectral_cap,
                         "largest graph size for the spectral cross-check");

    auto* verify = app.add_subcommand("verify", "cross-validate all routes");
    add_common(verify, verify_opts);
    verify->add_option("--n-max", verify_nmax, "count comparison depth");
    verify->add_option("--eps", verify_eps, "capacity comparison accuracy");
    verify->add_option("--budget", budget, "brute-force enumeration budget");
    verify->add_option("--spectral-cap", spectral_cap, "determinant size cap");
    verify->add_option("--seed", seed, "seed for randomized suites (reserved)");

    auto* bound = app.add_subcommand("bound-nonoverlap",
                                     "bound for variable-length non-overlapping codes");
    bound->add_option("--q", bound_q, "alphabet size")->required();
    bound->add_option("--n", bound_n, "maximum codeword length")->required();
    bound->add_flag("--search", do_search, "run the exhaustive maximizer");
    bound->add_option("--budget", search_budget, "candidate budget for the search");
    std::string bound_format = "text";
    bound->add_option("--format", bound_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* families = app.add_subcommand("families", "materialize a constraint family");
    add_common(families, families_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help exits clean, every parse failure is 2
    }

    try {
        if (genfun->parsed()) return run_genfun(genfun_opts);
        if (count->parsed()) return run_count(count_opts, n, n_from, n_to);
        if (capacity->parsed()) return run_capacity(capacity_opts, eps, spectral_cap);
        if (verify->parsed())
            return run_verify(verify_opts, verify_nmax, verify_eps, budget, spectral_cap);
        if (bound->parsed())
            return run_bound(bound_q, bound_n, do_search, search_budget, bound_format);
        if (families->parsed()) return run_families(families_opts);
    } catch (const ccap::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const ccap::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ccap::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ccap::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
