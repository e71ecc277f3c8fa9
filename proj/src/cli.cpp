#include "anick/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "anick/format.hpp"
#include "anick/hochschild.hpp"
#include "anick/verify.hpp"

namespace anick {

namespace {

using nlohmann::json;

ExecPolicy policy_of(const RunConfig& cfg) { return ExecPolicy{cfg.threads}; }

json chain_json(const Chain& c, const Presentation& p) {
    json j;
    j["splitting"] = json::array();
    for (const auto& s : c.splitting) j["splitting"].push_back(render_monomial(s, p));
    j["monomial"] = render_monomial(c.monomial(), p);
    j["length"] = c.length();
    j["weight"] = c.weight();
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string cmd_chains(const RunConfig& cfg, const Presentation& p) {
    auto groups = enumerate_chains(p, cfg.max_weight);
    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& [k, v] : groups.groups)
            for (const auto& c : v) {
                json j = chain_json(c, p);
                auto [a, b] = interlace(c, p);
                j["a"] = a;
                j["b"] = b;
                arr.push_back(std::move(j));
            }
        return dump(arr);
    }
    if (cfg.format == "csv") {
        os << "len,wt,chain\n";
        for (const auto& [k, v] : groups.groups)
            for (const auto& c : v)
                os << k.first << ',' << k.second << ',' << render_chain(c, p) << '\n';
        return os.str();
    }
    for (const auto& [k, v] : groups.groups) {
        os << "# length " << k.first << " weight " << k.second << " (" << v.size() << ")\n";
        for (const auto& c : v) {
            os << render_chain(c, p) << " len=" << k.first << " wt=" << k.second;
            if (k.first >= 1) {
                auto [a, b] = interlace(c, p);
                os << " a=";
                for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
                os << " b=";
                for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string cmd_betti(const RunConfig& cfg, const Presentation& p) {
    BettiTable t = betti(p, cfg.max_weight);
    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& [k, v] : t.entries)
            arr.push_back({{"n", k.first}, {"w", k.second}, {"count", v}});
        return dump(arr);
    }
    os << "n,w,count\n";
    for (const auto& [k, v] : t.entries) os << k.first << ',' << k.second << ',' << v << '\n';
    return os.str();
}

std::string cmd_model(const RunConfig& cfg, const Presentation& p) {
    auto chains = enumerate_chains(p, cfg.max_weight).all();
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : chains) {
            json rec;
            rec["generator"] = render_chain(c, p);
            rec["weight"] = c.weight();
            rec["length"] = c.length();
            rec["terms"] = json::array();
            for (const auto& [tup, coeff] : differential_b(c, p).terms) {
                json term;
                term["sign"] = coeff;
                term["parts"] = json::array();
                for (const auto& part : tup) term["parts"].push_back(render_chain(part, p));
                rec["terms"].push_back(std::move(term));
            }
            arr.push_back(std::move(rec));
        }
        return dump(arr);
    }
    std::ostringstream os;
    for (const auto& c : chains) {
        os << render_chain(c, p) << " wt=" << c.weight() << " len=" << c.length() << ": b =";
        TensorElement b = differential_b(c, p);
        if (b.zero()) {
            os << " 0\n";
            continue;
        }
        os << ' ' << render_tensor_element(b, p) << '\n';
    }
    return os.str();
}

std::string cmd_ext(const RunConfig& cfg, const Presentation& p) {
    auto chains = enumerate_chains(p, cfg.max_weight).all();
    struct Row {
        int arity;
        std::vector<Chain> parts;
        Int sign;
        Chain result;
    };
    std::vector<Row> rows;
    std::vector<Chain> acc;
    // all composable tuples within the weight budget, nonzero products only
    std::function<void(int, int)> rec = [&](int arity_left, int weight_left) {
        if (static_cast<int>(acc.size()) >= 2) {
            if (auto r = ext_product(acc, p))
                rows.push_back(Row{static_cast<int>(acc.size()), acc, r->first, r->second});
        }
        if (arity_left == 0) return;
        for (const auto& c : chains) {
            if (c.weight() > weight_left) continue;
            if (!acc.empty() && p.target(acc.back().monomial()) != p.source(c.monomial()))
                continue;
            acc.push_back(c);
            rec(arity_left - 1, weight_left - c.weight());
            acc.pop_back();
        }
    };
    rec(cfg.max_arity, cfg.max_weight);
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.arity != b.arity) return a.arity < b.arity;
        return a.parts < b.parts;
    });
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j;
            j["n"] = r.arity;
            j["parts"] = json::array();
            for (const auto& c : r.parts) j["parts"].push_back(render_chain(c, p));
            j["sign"] = r.sign;
            j["result"] = render_chain(r.result, p);
            arr.push_back(std::move(j));
        }
        return dump(arr);
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "n,parts,sign,result\n";
        for (const auto& r : rows) {
            os << r.arity << ',';
            for (size_t i = 0; i < r.parts.size(); ++i)
                os << (i ? ";" : "") << render_chain(r.parts[i], p);
            os << ',' << r.sign << ',' << render_chain(r.result, p) << '\n';
        }
        return os.str();
    }
    for (const auto& r : rows) {
        os << "mu_" << r.arity << "(";
        for (size_t i = 0; i < r.parts.size(); ++i)
            os << (i ? ", " : "") << render_chain(r.parts[i], p);
        os << ") = " << (r.sign < 0 ? "-" : "+") << render_chain(r.result, p) << '\n';
    }
    return os.str();
}

std::string cmd_hh(const RunConfig& cfg, const Presentation& p) {
    BettiTable t = (cfg.engine == "classical")
                       ? classical_hh_dims(p, cfg.max_degree, cfg.shift_lo, cfg.shift_hi,
                                           policy_of(cfg), cfg.cap)
                       : hh_dims(p, cfg.max_degree, cfg.shift_lo, cfg.shift_hi, policy_of(cfg),
                                 cfg.cap);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& [k, v] : t.entries)
            arr.push_back({{"degree", k.first}, {"weight", k.second}, {"dim", v}});
        return dump(arr);
    }
    std::ostringstream os;
    os << "degree,weight,dim\n";
    for (const auto& [k, v] : t.entries) os << k.first << ',' << k.second << ',' << v << '\n';
    return os.str();
}

std::string cmd_verify(const RunConfig& cfg, const Presentation& p,
                       std::vector<Certificate>& certs, bool& all_pass) {
    std::string digest = presentation_digest(p);
    ExecPolicy policy = policy_of(cfg);
    int w = cfg.max_weight;
    std::vector<VerificationReport> reports;
    reports.push_back(verify_betti_homology(p, w, policy, cfg.cap));
    reports.push_back(verify_retract_identities(p, std::min(w, 8), policy));
    reports.push_back(verify_morse_oracle(p, std::min(w, 6), policy));
    reports.push_back(verify_transfer_equivalence(p, std::min(w, 10), cfg.max_arity, policy));
    reports.push_back(verify_b_squared(p, w, cfg.sabotage, policy));
    reports.push_back(check_maurer_cartan(p, w, {}, policy));

    all_pass = true;
    for (const auto& r : reports) {
        Certificate c;
        c.suite = r.suite;
        c.digest = digest;
        c.bounds = r.bounds;
        c.pass = r.pass;
        for (const auto& ce : r.counterexamples) {
            std::ostringstream line;
            line << ce.item;
            if (ce.arity > 0) line << " arity=" << ce.arity;
            if (!ce.detail.empty()) line << " " << ce.detail;
            line << " residual=" << ce.residual;
            c.counterexamples.push_back(line.str());
        }
        all_pass = all_pass && r.pass;
        certs.push_back(std::move(c));
    }

    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : certs) {
            json j;
            j["suite"] = c.suite;
            j["digest"] = c.digest;
            j["bounds"] = c.bounds;
            j["pass"] = c.pass;
            j["counterexamples"] = c.counterexamples;
            arr.push_back(std::move(j));
        }
        return dump(arr);
    }
    std::ostringstream os;
    for (const auto& c : certs) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << " (" << c.bounds
           << ") digest=" << c.digest << '\n';
        for (const auto& line : c.counterexamples) os << "    " << line << '\n';
    }
    return os.str();
}

namespace {

bool parse_window(const std::string& spec, int& lo, int& hi) {
    auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(spec);
            lo = -std::abs(k);
            hi = std::abs(k);
            return true;
        }
        lo = std::stoi(spec.substr(0, dots));
        hi = std::stoi(spec.substr(dots + 2));
        return lo <= hi;
    } catch (...) {
        return false;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact minimal-model and Hochschild computations for monomial quiver algebras"};
    app.require_subcommand(1);

    std::string window_spec;
    auto add_common = [&](CLI::App* sub, bool weight_is_window) {
        sub->add_option("input", cfg.input_path, "presentation file")->required();
        if (weight_is_window)
            sub->add_option("-w,--window", window_spec,
                            "weight-shift window, lo..hi or a symmetric bound");
        else
            sub->add_option("-w,--max-weight", cfg.max_weight, "weight bound");
        sub->add_option("--format", cfg.format, "text | csv | json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("-o,--output", cfg.output_path, "write to file instead of stdout");
        sub->add_option("--threads", cfg.threads, "worker threads (1 = serial)");
        sub->add_option("--cap", cfg.cap, "largest admissible block dimension");
    };

    auto* chains = app.add_subcommand("chains", "list Anick chains with their splittings");
    add_common(chains, false);
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the trivial module");
    add_common(betti_cmd, false);
    auto* model = app.add_subcommand("model", "minimal-model differential per generator");
    add_common(model, false);
    auto* ext = app.add_subcommand("ext", "nonzero A-infinity products on Ext");
    add_common(ext, false);
    ext->add_option("-n,--max-arity", cfg.max_arity, "largest product arity");
    auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions");
    add_common(hh, true);
    hh->add_option("-d,--max-degree", cfg.max_degree, "largest cohomological degree");
    hh->add_option("--engine", cfg.engine, "twisted | classical")
        ->check(CLI::IsMember({"twisted", "classical"}));
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify, false);
    verify->add_option("-n,--max-arity", cfg.max_arity, "largest coproduct arity checked");
    verify->add_flag("--sabotage", cfg.sabotage, "negative control: corrupt one sign of b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    if (!window_spec.empty()) {
        if (!parse_window(window_spec, cfg.shift_lo, cfg.shift_hi)) {
            err << "error: bad window '" << window_spec << "'\n";
            return kExitInput;
        }
    }

    try {
        Presentation p = load_presentation(cfg.input_path);
        std::string text;
        int code = kExitOk;
        if (chains->parsed()) {
            cfg.command = "chains";
            text = cmd_chains(cfg, p);
        } else if (betti_cmd->parsed()) {
            cfg.command = "betti";
            text = cmd_betti(cfg, p);
        } else if (model->parsed()) {
            cfg.command = "model";
            text = cmd_model(cfg, p);
        } else if (ext->parsed()) {
            cfg.command = "ext";
            text = cmd_ext(cfg, p);
        } else if (hh->parsed()) {
            cfg.command = "hh";
            text = cmd_hh(cfg, p);
        } else if (verify->parsed()) {
            cfg.command = "verify";
            std::vector<Certificate> certs;
            bool all_pass = true;
            text = cmd_verify(cfg, p, certs, all_pass);
            if (!all_pass) code = kExitVerifyFailed;
        }
        if (cfg.output_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.output_path);
            if (!f) throw InputError("cannot write '" + cfg.output_path + "'");
            f << text;
        }
        return code;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace anick
