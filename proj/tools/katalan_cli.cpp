#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "katalan/json_io.hpp"
#include "katalan/verify.hpp"

namespace {

using namespace katalan;

Vec parse_int_list(const std::string& s, const char* what) {
    Vec out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "' as an integer");
        }
    }
    return out;
}

RootIdeal parse_ideal(const std::string& s, int ell) {
    std::vector<int> start(ell, ell + 1);
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("ideal: expected row:startcol pairs, got '" + item + "'");
            int row = std::stoi(item.substr(0, colon));
            int col = std::stoi(item.substr(colon + 1));
            if (row < 1 || row > ell) throw std::invalid_argument("ideal: row outside [1, ell]");
            start[row - 1] = col;
        }
    }
    return RootIdeal::from_start_cols(ell, std::move(start));
}

void print_expansion(const HExpansion& f, bool ascii) {
    if (ascii) std::cout << f.to_string() << "\n";
    else std::cout << to_json(f).dump() << "\n";
}

struct VerifyOptions {
    SweepConfig cfg;
    std::string config_file;
    // which flags were set explicitly on the command line
    bool has_ell = false, has_k = false, has_n = false, has_cap = false, has_random = false,
         has_seed = false, has_jobs = false, has_strict = false;
};

void apply_config_file(VerifyOptions& vo) {
    if (vo.config_file.empty()) return;
    std::ifstream in(vo.config_file);
    if (!in) throw std::invalid_argument("config: cannot open " + vo.config_file);
    json j = json::parse(in);
    SweepConfig& c = vo.cfg;
    if (j.contains("max_ell") && !vo.has_ell) c.max_ell = j["max_ell"];
    if (j.contains("max_k") && !vo.has_k) c.max_k = j["max_k"];
    if (j.contains("max_n") && !vo.has_n) c.max_n = j["max_n"];
    if (j.contains("degree_cap") && !vo.has_cap) c.degree_cap = j["degree_cap"];
    if (j.contains("random_instances") && !vo.has_random) c.random_instances = j["random_instances"];
    if (j.contains("rng_seed") && !vo.has_seed) c.rng_seed = j["rng_seed"];
    if (j.contains("parallelism") && !vo.has_jobs) c.parallelism = j["parallelism"];
    if (j.contains("strict_length_flag") && !vo.has_strict) c.strict_length = j["strict_length_flag"];
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact computations with Katalan functions, K-k-Schur functions and their lowering-operator structure"};
    app.require_subcommand(1);
    bool ascii = false;
    app.add_flag("--ascii", ascii, "human-readable output instead of JSON");
    auto add_ascii = [&ascii](CLI::App* sub) {
        sub->add_flag("--ascii", ascii, "human-readable output instead of JSON");
    };

    std::string lambda_arg, gamma_arg, ideal_arg, multiset_arg;
    int k = 0, z = 0, n = 1, ell = 0;
    bool closed = false, generalized = false, strict = false;

    auto* cmd_gkk = app.add_subcommand("gkk", "K-k-Schur function of a k-bounded partition");
    add_ascii(cmd_gkk);
    cmd_gkk->add_option("lambda", lambda_arg, "comma-separated parts, trailing zeros fix the length")
        ->required();
    cmd_gkk->add_option("--k", k, "the bound k")->required();
    cmd_gkk->add_flag("--closed", closed, "closed k-Schur Katalan function");
    cmd_gkk->add_flag("--generalized", generalized, "accept extended members");

    auto* cmd_lower = app.add_subcommand("lower", "structure of L_z^n acting on g_lambda^(k)");
    add_ascii(cmd_lower);
    cmd_lower->add_option("lambda", lambda_arg)->required();
    cmd_lower->add_option("--k", k)->required();
    cmd_lower->add_option("--z", z, "lowering index")->required();
    cmd_lower->add_option("--n", n, "operator power");

    VerifyOptions vo;
    std::string theorem_id;
    auto* cmd_verify = app.add_subcommand("verify", "run an identity sweep");
    cmd_verify->add_option("id", theorem_id, "theorem id")->required();
    auto* oe = cmd_verify->add_option("--max-ell", vo.cfg.max_ell);
    auto* ok_ = cmd_verify->add_option("--max-k", vo.cfg.max_k);
    auto* on = cmd_verify->add_option("--max-n", vo.cfg.max_n);
    auto* oc = cmd_verify->add_option("--degree-cap", vo.cfg.degree_cap);
    auto* orr = cmd_verify->add_option("--random", vo.cfg.random_instances);
    auto* os = cmd_verify->add_option("--seed", vo.cfg.rng_seed);
    auto* oj = cmd_verify->add_option("--jobs", vo.cfg.parallelism);
    auto* ost = cmd_verify->add_flag("--strict-length", vo.cfg.strict_length);
    cmd_verify->add_option("--config", vo.config_file, "JSON file mirroring the sweep configuration");

    auto* cmd_grid = app.add_subcommand("grid", "ASCII grid of a Katalan term");
    cmd_grid->add_option("--ell", ell)->required();
    cmd_grid->add_option("--ideal", ideal_arg, "row:startcol pairs");
    cmd_grid->add_option("--multiset", multiset_arg, "comma-separated indices");
    cmd_grid->add_option("--gamma", gamma_arg)->required();

    auto* cmd_omega = app.add_subcommand("omega", "straightening index sets");
    add_ascii(cmd_omega);
    cmd_omega->add_option("lambda", lambda_arg)->required();
    cmd_omega->add_option("--k", k)->required();
    auto* oz = cmd_omega->add_option("--z", z);
    cmd_omega->add_option("--multiset", multiset_arg, "iterate over a multiset of indices");

    auto* cmd_bruhat = app.add_subcommand("bruhat", "Bruhat lower set via core containment");
    add_ascii(cmd_bruhat);
    cmd_bruhat->add_option("lambda", lambda_arg)->required();
    cmd_bruhat->add_option("--ell", ell, "length context (defaults to the given length)");
    cmd_bruhat->add_option("--k", k)->required();
    cmd_bruhat->add_flag("--strict-length", strict);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (cmd_gkk->parsed()) {
        Vec lam = parse_int_list(lambda_arg, "lambda");
        HExpansion f;
        if (closed) f = closed_gkk(lam, k);
        else f = gkk(lam, k, generalized);
        print_expansion(f, ascii);
        return 0;
    }

    if (cmd_lower->parsed()) {
        Vec lam = parse_int_list(lambda_arg, "lambda");
        if (!is_bounded_partition(lam, k))
            throw std::domain_error("lower: lambda is not a k-bounded partition");
        if (z < 1 || z > static_cast<int>(lam.size()))
            throw std::domain_error("lower: z outside [1, ell]");
        IdentityRecord rec = theorem_3_18(lam, k, z, n);
        const int b = RootIdeal::delta_k(lam, k).bottom();
        std::set<Vec> om = z > b ? omega_multiset(lam, k, IndexMultiset::power(lam.size(), z, n))
                                 : omega(lam, k, z).elems;
        if (ascii) {
            std::cout << "omega:";
            for (const Vec& v : om) std::cout << " " << vec_to_string(v);
            std::cout << "\nformula: " << rec.rhs.to_string() << "\ndirect:  " << rec.lhs.to_string()
                      << "\nequal:   " << (rec.equal ? "true" : "false") << "\n";
        } else {
            json j{{"lambda", lam},     {"k", k},
                   {"z", z},            {"n", n},
                   {"case", rec.note},  {"omega", omega_to_json(om)},
                   {"formula", to_json(rec.rhs)}, {"direct", to_json(rec.lhs)},
                   {"equal", rec.equal}};
            std::cout << j.dump() << "\n";
        }
        return rec.equal ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
        vo.has_ell = oe->count() > 0;
        vo.has_k = ok_->count() > 0;
        vo.has_n = on->count() > 0;
        vo.has_cap = oc->count() > 0;
        vo.has_random = orr->count() > 0;
        vo.has_seed = os->count() > 0;
        vo.has_jobs = oj->count() > 0;
        vo.has_strict = ost->count() > 0;
        apply_config_file(vo);
        if (!is_verify_id(theorem_id)) {
            std::cerr << "unknown theorem id '" << theorem_id << "'; known ids:";
            for (const auto& id : verify_ids()) std::cerr << " " << id;
            std::cerr << "\n";
            return 2;
        }
        SweepOutcome out = run_verify(theorem_id, vo.cfg);
        std::cout << out.summary() << "\n";
        return out.ok() ? 0 : 1;
    }

    if (cmd_grid->parsed()) {
        if (ell < 1 || ell > 30) throw std::domain_error("grid: ell must be in [1, 30]");
        Vec gamma = parse_int_list(gamma_arg, "gamma");
        if (static_cast<int>(gamma.size()) != ell)
            throw std::domain_error("grid: gamma must have exactly ell entries");
        RootIdeal psi = parse_ideal(ideal_arg, ell);
        IndexMultiset m = IndexMultiset::from_elements(ell, parse_int_list(multiset_arg, "multiset"));
        std::cout << render_grid(KatalanTerm(psi, m, gamma));
        return 0;
    }

    if (cmd_omega->parsed()) {
        Vec lam = parse_int_list(lambda_arg, "lambda");
        if (!is_bounded_partition(lam, k))
            throw std::domain_error("omega: lambda is not a k-bounded partition");
        std::set<Vec> result;
        if (oz->count() > 0) {
            if (z < 1 || z > static_cast<int>(lam.size()))
                throw std::domain_error("omega: z outside [1, ell]");
            result = omega(lam, k, z).elems;
        } else {
            IndexMultiset m =
                IndexMultiset::from_elements(lam.size(), parse_int_list(multiset_arg, "multiset"));
            result = omega_multiset(lam, k, m);
        }
        if (ascii) {
            for (const Vec& v : result) std::cout << vec_to_string(v) << "\n";
        } else {
            std::cout << omega_to_json(result).dump() << "\n";
        }
        return 0;
    }

    if (cmd_bruhat->parsed()) {
        Vec lam = parse_int_list(lambda_arg, "lambda");
        if (ell == 0) ell = static_cast<int>(lam.size());
        lam = pad_to(lam, ell);
        auto lower_set = bruhat_lower_set(lam, ell, k, strict);
        if (ascii) {
            for (const Vec& v : lower_set) std::cout << vec_to_string(v) << "\n";
        } else {
            json j = json::array();
            for (const Vec& v : lower_set) j.push_back(v);
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
