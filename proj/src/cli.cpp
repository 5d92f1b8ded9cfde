#include "tcore/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcore/density.hpp"
#include "tcore/etaq.hpp"
#include "tcore/hecke.hpp"
#include "tcore/partition.hpp"
#include "tcore/qseries.hpp"

namespace tcore {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<uint64_t> parse_u64_list(const std::string& csv) {
    std::vector<uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty list entry");
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void write_series_csv(std::ostream& out, const TruncatedSeries& s, uint64_t t) {
    out << "# t=" << t << " modulus=" << s.modulus() << " trunc=" << s.trunc()
        << "\n";
    for (std::size_t n = 0; n < s.trunc(); ++n)
        out << n << "," << s.coeff_str(n) << "\n";
}

int cmd_expand(const std::string& gen, uint64_t t, uint64_t trunc,
               uint64_t modulus, bool json, std::ostream& out) {
    TruncatedSeries s = [&] {
        if (gen == "ct") return ct_series(t, trunc, modulus);
        if (gen == "abar") return abar_series(t, trunc, modulus);
        if (gen == "bbar") return bbar_series(t, trunc, modulus);
        throw std::invalid_argument("unknown generator: " + gen);
    }();
    if (!json) {
        write_series_csv(out, s, t);
        return 0;
    }
    ordered_json j;
    j["gen"] = gen;
    j["t"] = t;
    j["modulus"] = std::to_string(modulus);
    j["trunc"] = s.trunc();
    ordered_json coeffs = ordered_json::array();
    for (std::size_t n = 0; n < s.trunc(); ++n) coeffs.push_back(s.coeff_str(n));
    j["coefficients"] = coeffs;
    out << j.dump() << "\n";
    return 0;
}

int cmd_checkmf(const EtaQuotient& eq, bool json, std::ostream& out) {
    ModularityReport rep = modularity_report(eq);
    if (json) {
        ordered_json j;
        j["weight"] = rep.weight.get_str();
        j["level"] = rep.level;
        j["conditionA"] = rep.condition_a;
        j["conditionB"] = rep.condition_b;
        if (rep.character_kernel)
            j["characterKernel"] = std::to_string(*rep.character_kernel);
        else
            j["characterKernel"] = nullptr;
        ordered_json cusps = ordered_json::array();
        for (const auto& [d, order] : rep.cusp_orders) {
            ordered_json c;
            c["d"] = d;
            c["orderNum"] = order.get_num().get_str();
            c["orderDen"] = order.get_den().get_str();
            cusps.push_back(c);
        }
        j["cusps"] = cusps;
        j["holomorphic"] = rep.holomorphic;
        out << j.dump() << "\n";
    } else {
        out << "weight: " << rep.weight.get_str() << "\n";
        out << "level: " << rep.level << "\n";
        out << "conditionA: " << (rep.condition_a ? "true" : "false") << "\n";
        out << "conditionB: " << (rep.condition_b ? "true" : "false") << "\n";
        out << "characterKernel: "
            << (rep.character_kernel ? std::to_string(*rep.character_kernel)
                                     : std::string("undefined"))
            << "\n";
        for (const auto& [d, order] : rep.cusp_orders)
            out << "cusp d=" << d << " order=" << order.get_str() << "\n";
        out << "holomorphic: " << (rep.holomorphic ? "true" : "false") << "\n";
    }
    return rep.holomorphic ? 0 : 1;
}

std::string density_csv(const DensityReport& rep) {
    std::ostringstream os;
    os << "X,count,ratio\n";
    for (std::size_t i = 0; i < rep.checkpoints.size(); ++i)
        os << rep.checkpoints[i] << "," << rep.counts[i] << ","
           << ratio_decimal(rep.ratios[i]) << "\n";
    return os.str();
}

int cmd_density(uint64_t t, uint64_t m, uint64_t r,
                const std::vector<uint64_t>& checkpoints,
                const std::string& golden_path, std::ostream& out,
                std::ostream& err) {
    uint64_t max_cp = *std::max_element(checkpoints.begin(), checkpoints.end());
    TruncatedSeries s = bbar_series(t, max_cp + 1, m);
    DensityReport rep = density_report(s, m, r, checkpoints);
    std::string csv = density_csv(rep);
    out << csv;
    if (golden_path.empty()) return 0;

    std::ifstream in(golden_path);
    if (!in) {
        std::ofstream pin(golden_path);
        if (!pin) {
            err << "cannot write golden file: " << golden_path << "\n";
            return 2;
        }
        pin << csv;
        err << "golden file pinned: " << golden_path << "\n";
        return 0;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != csv) {
        err << "golden mismatch against " << golden_path << "\n";
        return 1;
    }
    return 0;
}

int cmd_hecke(uint32_t k, uint32_t v, const std::vector<uint64_t>& primes,
              uint64_t trunc, uint64_t verify_nmax, bool json,
              std::ostream& out) {
    NilpotencyResult res = nilpotency_search(k, v, primes, trunc);

    CongruenceInstanceResult inst;
    bool ran_instance = false;
    if (verify_nmax > 0 && res.annihilated_depth && *res.annihilated_depth > 0) {
        std::vector<uint64_t> used(primes.begin(),
                                   primes.begin() + *res.annihilated_depth);
        uint64_t q_prod = 1;
        for (uint64_t q : used) q_prod *= q;
        std::size_t need =
            q_prod * verify_nmax < 24
                ? 1
                : static_cast<std::size_t>((q_prod * verify_nmax - 24) / 24 + 1);
        inst = verify_bbar3_instance(used, v, verify_nmax, need);
        ran_instance = true;
    }

    if (json) {
        ordered_json j;
        j["k"] = k;
        j["v"] = v;
        j["trunc"] = trunc;
        ordered_json steps = ordered_json::array();
        for (const auto& st : res.steps) {
            ordered_json s;
            s["prime"] = st.prime;
            s["nonzeroCount"] = st.nonzero_count;
            if (st.first_nonzero)
                s["firstNonzeroExponent"] = *st.first_nonzero;
            else
                s["firstNonzeroExponent"] = nullptr;
            s["trunc"] = st.trunc;
            steps.push_back(s);
        }
        j["steps"] = steps;
        if (res.annihilated_depth)
            j["annihilatedAtDepth"] = *res.annihilated_depth;
        else
            j["annihilatedAtDepth"] = nullptr;
        j["truncationExhausted"] = res.truncation_exhausted;
        if (ran_instance) {
            ordered_json vi;
            vi["pass"] = inst.pass;
            vi["vacuous"] = inst.vacuous;
            vi["tested"] = inst.tested;
            vi["violations"] = inst.violations;
            j["verifyInstance"] = vi;
        }
        out << j.dump() << "\n";
    } else {
        for (const auto& st : res.steps) {
            out << "T_" << st.prime << ": nonzero=" << st.nonzero_count
                << " trunc=" << st.trunc;
            if (st.first_nonzero) out << " first=" << *st.first_nonzero;
            out << "\n";
        }
        if (res.annihilated_depth)
            out << "annihilated at depth " << *res.annihilated_depth << "\n";
        else if (res.truncation_exhausted)
            out << "not annihilated at depth " << res.steps.size()
                << " (truncation exhausted)\n";
        else
            out << "not annihilated at depth " << res.steps.size()
                << " (prime list exhausted)\n";
        if (ran_instance)
            out << "instance check: " << (inst.pass ? "pass" : "fail")
                << " tested=" << inst.tested << "\n";
    }
    bool ok = res.annihilated_depth.has_value() && (!ran_instance || inst.pass);
    return ok ? 0 : 1;
}

int cmd_scan(uint64_t t, uint64_t m, uint64_t amax, uint64_t nmax,
             std::ostream& out) {
    auto hits = congruence_scan_bbar(t, m, amax, nmax);
    out << "# candidates verified up to nmax=" << nmax
        << ", not proved\n";
    out << "A,B\n";
    for (const auto& h : hits) out << h.a << "," << h.b << "\n";
    return 0;
}

int cmd_oracle_tcore(uint64_t n, uint64_t t, std::ostream& out) {
    out << count_t_cores(n, t) << "\n";
    return 0;
}

int cmd_oracle_hooks(const std::string& parts_csv, std::ostream& out) {
    auto parts64 = parse_u64_list(parts_csv);
    std::vector<uint32_t> parts(parts64.begin(), parts64.end());
    PartitionDiagram d(parts);
    for (const auto& row : hook_numbers(d)) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? "," : "") << row[j];
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"t-core analogue series, eta-quotient modularity checks, "
                 "density measurements and Hecke experiments"};
    app.require_subcommand(1);

    // expand
    auto* expand_cmd =
        app.add_subcommand("expand", "emit generating-function coefficients");
    std::string gen;
    uint64_t t = 0, trunc = 0, modulus = 0;
    bool json = false, csv = false;
    expand_cmd->add_option("--gen", gen, "ct | abar | bbar")->required();
    expand_cmd->add_option("--t", t, "index t")->required();
    expand_cmd->add_option("--trunc", trunc, "truncation T")->required();
    expand_cmd->add_option("--modulus", modulus, "0 = exact");
    expand_cmd->add_flag("--json", json, "JSON output");
    expand_cmd->add_flag("--csv", csv, "CSV output (default)");

    // checkmf
    auto* checkmf_cmd =
        app.add_subcommand("checkmf", "eta-quotient modularity report");
    std::string family;
    uint64_t mf_alpha = 0, mf_m = 1, mf_k = 1, mf_p = 5, mf_a = 1, mf_index = 1;
    std::string mf_primes = "5", mf_exponents = "1";
    bool mf_json = false;
    checkmf_cmd->add_option("--family", family, "E | G | A | F | H | B")
        ->required();
    checkmf_cmd->add_option("--alpha", mf_alpha, "alpha >= 0");
    checkmf_cmd->add_option("--m", mf_m, "m coprime to 6");
    checkmf_cmd->add_option("--k", mf_k, "k >= 1");
    checkmf_cmd->add_option("--p", mf_p, "prime >= 5 (family A)");
    checkmf_cmd->add_option("--a", mf_a, "exponent (family A)");
    checkmf_cmd->add_option("--primes", mf_primes, "family B prime list");
    checkmf_cmd->add_option("--exponents", mf_exponents, "family B exponent list");
    checkmf_cmd->add_option("--index", mf_index,
                            "family B distinguished prime, 1-based");
    checkmf_cmd->add_flag("--json", mf_json, "JSON output");

    // density
    auto* density_cmd =
        app.add_subcommand("density", "residue-class density report for bbar_t");
    uint64_t d_t = 3, d_m = 2, d_r = 0;
    std::string d_checkpoints = "1000,10000,100000";
    std::string d_golden;
    density_cmd->add_option("--t", d_t, "index t")->required();
    density_cmd->add_option("--modulus", d_m, "modulus M")->required();
    density_cmd->add_option("--residue", d_r, "residue r");
    density_cmd->add_option("--checkpoints", d_checkpoints, "ascending X list");
    density_cmd->add_option("--golden", d_golden,
                            "compare against (or pin) a golden CSV");

    // hecke
    auto* hecke_cmd = app.add_subcommand(
        "hecke", "operator annihilation experiment on F(1,1,k)");
    uint64_t h_k = 1, h_v = 1, h_trunc = 100000, h_verify = 0;
    std::string h_primes = "5,7,11";
    bool h_json = false;
    hecke_cmd->add_option("--k", h_k, "k >= 1")->required();
    hecke_cmd->add_option("--v", h_v, "target power of 2")->required();
    hecke_cmd->add_option("--primes", h_primes, "ascending primes coprime to 6");
    hecke_cmd->add_option("--trunc", h_trunc, "expansion truncation");
    hecke_cmd->add_option("--verify-nmax", h_verify,
                          "also check the multiplicative congruence up to n");
    hecke_cmd->add_flag("--json", h_json, "JSON output");

    // scan
    auto* scan_cmd = app.add_subcommand(
        "scan", "search progressions A n + B with bbar_t = 0 mod M");
    uint64_t s_t = 3, s_m = 2, s_amax = 24, s_nmax = 500;
    scan_cmd->add_option("--t", s_t, "index t")->required();
    scan_cmd->add_option("--modulus", s_m, "modulus M")->required();
    scan_cmd->add_option("--amax", s_amax, "largest progression step");
    scan_cmd->add_option("--nmax", s_nmax, "verification bound");

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "brute-force partition ground truth");
    oracle_cmd->require_subcommand(1);
    auto* oracle_tcore = oracle_cmd->add_subcommand("tcore", "count t-cores of n");
    uint64_t o_n = 0, o_t = 2;
    oracle_tcore->add_option("--n", o_n, "n <= 40")->required();
    oracle_tcore->add_option("--t", o_t, "t >= 2")->required();
    auto* oracle_hooks =
        oracle_cmd->add_subcommand("hooks", "hook numbers of a partition");
    std::string o_parts;
    oracle_hooks->add_option("--parts", o_parts, "comma-separated parts")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*expand_cmd) return cmd_expand(gen, t, trunc, modulus, json, out);
        if (*checkmf_cmd) {
            EtaQuotient eq = [&]() -> EtaQuotient {
                if (family == "E") return family_E(mf_alpha, mf_m);
                if (family == "G") return family_G(mf_alpha, mf_m);
                if (family == "A") return family_A(mf_p, mf_a);
                if (family == "F") return family_F(mf_alpha, mf_m, mf_k);
                if (family == "H") return family_H(mf_alpha, mf_m, mf_k);
                if (family == "B") {
                    auto ps = parse_u64_list(mf_primes);
                    auto as = parse_u64_list(mf_exponents);
                    if (ps.size() != as.size())
                        throw std::invalid_argument(
                            "primes and exponents must have equal length");
                    if (mf_index < 1 || mf_index > ps.size())
                        throw std::invalid_argument("index out of range");
                    std::vector<std::pair<uint64_t, uint32_t>> factors;
                    for (std::size_t i = 0; i < ps.size(); ++i)
                        factors.emplace_back(ps[i], static_cast<uint32_t>(as[i]));
                    return family_B(factors, mf_index - 1,
                                    static_cast<uint32_t>(mf_k));
                }
                throw std::invalid_argument("unknown family: " + family);
            }();
            return cmd_checkmf(eq, mf_json, out);
        }
        if (*density_cmd)
            return cmd_density(d_t, d_m, d_r, parse_u64_list(d_checkpoints),
                               d_golden, out, err);
        if (*hecke_cmd)
            return cmd_hecke(static_cast<uint32_t>(h_k),
                             static_cast<uint32_t>(h_v), parse_u64_list(h_primes),
                             h_trunc, h_verify, h_json, out);
        if (*scan_cmd) return cmd_scan(s_t, s_m, s_amax, s_nmax, out);
        if (*oracle_cmd) {
            if (*oracle_tcore) return cmd_oracle_tcore(o_n, o_t, out);
            if (*oracle_hooks) return cmd_oracle_hooks(o_parts, out);
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace tcore
