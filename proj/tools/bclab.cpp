#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bclab/config.hpp"
#include "bclab/properties.hpp"
#include "bclab/serialize.hpp"

using namespace bclab;

namespace {

constexpr int kUsageError = 1;
constexpr int kVerificationFailed = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned thread_cap() {
    const char* env = std::getenv("BCLAB_THREADS");
    if (!env || !*env) return 0;
    try {
        return static_cast<unsigned>(parse_count(env));
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("BCLAB_THREADS must be a non-negative integer, got '") + env + "'");
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << text;
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string s;
    for (const auto& c : cells) s += (s.empty() ? "" : ",") + c;
    return s + "\n";
}

// Either --config or inline --modulus/--gen/--exp/--tau describing E and pi.
struct Source {
    std::string config_path;
    std::string which;
    u64 modulus = 0;
    std::vector<i64> gens;
    std::vector<i64> exps;
    double tau = 0.0;

    void attach(CLI::App* cmd, bool with_character) {
        cmd->add_option("--config", config_path, "experiment config file");
        cmd->add_option("--which", which, with_character ? "pi or piprime (default pi)" : "E or F (default E)");
        cmd->add_option("--modulus", modulus, "ambient modulus M of the field");
        cmd->add_option("--gen", gens, "generators of H = Gal(Q(zeta_M)/E)")->allow_extra_args(false)->delimiter(',');
        if (with_character) {
            cmd->add_option("--exp", exps, "exponent vector of the character mod M")->allow_extra_args(false)->delimiter(',');
            cmd->add_option("--tau", tau, "unitary twist");
        }
    }

    ExperimentConfig config() const {
        if (!config_path.empty()) {
            if (modulus) throw UsageError("--config and --modulus are mutually exclusive");
            return ExperimentConfig::load(config_path);
        }
        if (!modulus) throw UsageError("either --config or --modulus is required");
        ExperimentConfig c;
        c.e = {modulus, gens};
        c.pi.exponents = exps;
        c.pi.tau = tau;
        return c;
    }

    bool second() const {
        if (which.empty() || which == "E" || which == "pi") return false;
        if (which == "F" || which == "piprime") return true;
        throw UsageError("--which must be E, F, pi or piprime");
    }
};

int cmd_field(const Source& src, u64 primes_limit, bool json) {
    const auto config = src.config();
    const auto ex = build_experiment(config);
    const auto& e = src.second() ? ex.f : ex.e;
    if (json) {
        Json j = provenance(config.hash());
        j["field"] = to_json(e);
        j["tower_degrees"] = tower_degrees(e);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << csv_banner(config.hash()) << "\n" << csv_row({"p", "f_p", "g_p", "ramified"});
    for (u64 p : primes_up_to(primes_limit)) {
        const auto s = splitting_data(e, p);
        std::cout << csv_row({std::to_string(p), std::to_string(s.f), std::to_string(s.g), s.ramified ? "1" : "0"});
    }
    return 0;
}

int cmd_char(u64 modulus, const std::vector<i64>& exps, u64 upto) {
    if (!modulus) throw UsageError("--modulus must be positive");
    const auto group = UnitGroup::get(modulus);
    std::vector<i64> e = exps;
    if (e.empty()) e.assign(group->rank(), 0);
    if (e.size() != group->rank())
        throw UsageError("--exp needs " + std::to_string(group->rank()) + " entries for modulus " + std::to_string(modulus));
    const DirichletChar chi(group, e);
    ExperimentConfig c;
    c.e.modulus = modulus;
    c.pi.exponents = e;
    Json j = provenance(c.hash());
    j["character"] = to_json(chi);
    Json gens = Json::array();
    for (const auto& g : group->generators()) gens.push_back(Json{{"unit", g.unit}, {"order", g.order}});
    j["generators"] = gens;
    j["root_order"] = group->exponent();
    Json values = Json::array();
    for (u64 n = 1; n <= upto; ++n) {
        const auto v = chi(static_cast<i64>(n));
        if (!v) {
            values.push_back(nullptr);
            continue;
        }
        const Zeta z = v->reduced();
        values.push_back(Json{{"exponent", z.exponent}, {"order", z.order}});
    }
    j["values"] = values;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bc(const Source& src) {
    const auto config = src.config();
    const auto ex = build_experiment(config);
    const auto& pi = src.second() ? ex.pi_prime : ex.pi;
    Json fiber = Json::array();
    for (const auto& c : bc_fiber(pi)) fiber.push_back(to_json(c));
    Json j = provenance(config.hash());
    j["pi"] = to_json(pi);
    j["fiber"] = fiber;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_coeffs(const Source& src, u64 limit) {
    const auto config = src.config();
    const auto ex = build_experiment(config);
    const auto& pi = src.second() ? ex.pi_prime : ex.pi;
    std::cout << csv_banner(config.hash()) << "\n" << csv_row({"n", "re", "im"});
    std::vector<LocalCoeff> all;
    for (u64 p : primes_up_to(limit)) {
        unsigned k = 0;
        for (u64 n = p; n <= limit; n = n > limit / p ? limit + 1 : n * p) ++k;
        for (auto& c : local_coeffs_over_E(pi, p, k)) all.push_back(c);
    }
    std::sort(all.begin(), all.end(), [](const LocalCoeff& a, const LocalCoeff& b) { return a.n < b.n; });
    for (const auto& c : all) std::cout << csv_row({std::to_string(c.n), format_double(c.value.real()), format_double(c.value.imag())});
    return 0;
}

int cmd_rs(const std::string& path, const std::string& csv, u64 limit) {
    const auto config = ExperimentConfig::load(path);
    const auto ex = build_experiment(config);
    const RsConvolution rs(ex.pi, ex.pi_prime);
    Json j = provenance(config.hash());
    j["E"] = to_json(ex.e);
    j["F"] = to_json(ex.f);
    j["modulus"] = rs.modulus();
    Json left = Json::array(), right = Json::array();
    for (const auto& c : rs.left_fiber()) left.push_back(to_json(c));
    for (const auto& c : rs.right_fiber()) right.push_back(to_json(c));
    j["left_fiber"] = left;
    j["right_fiber"] = right;
    j["T"] = to_json(rs.pairs(), rs);
    j["m"] = rs.multiplicity();
    j["tau0"] = rs.pairs().tau0 ? Json(*rs.pairs().tau0) : Json(nullptr);
    j["flags"] = to_json(rs.flags());
    std::cout << j.dump(2) << "\n";
    if (!csv.empty()) {
        const auto series = rs_coefficients(ex.pi, ex.pi_prime, limit);
        std::ostringstream os;
        os << csv_banner(config.hash()) << "\n" << csv_row({"n", "re", "im"});
        PrimePowerStream(limit).for_each([&](const PrimePower& pp) {
            if (rs.excluded(pp.p)) return;
            const auto a = series.coefficients[pp.n];
            os << csv_row({std::to_string(pp.n), format_double(a.real()), format_double(a.imag())});
        });
        write_file(csv, os.str());
    }
    return 0;
}

int cmd_count(u64 l, u64 lp, u64 s, u64 r) {
    if (!l || !lp) throw UsageError("--l and --lprime must be positive");
    std::ostringstream key;
    key << "count l=" << l << " lprime=" << lp << " s=" << s << " r=" << r << "\n";
    Json j = provenance(fnv1a_hex(key.str()));
    const Json prediction = to_json(predict_counts(l, lp, s, r));
    for (const auto& [k, v] : prediction.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_pnt(const std::string& path, const std::string& limit_text, const std::vector<std::string>& checkpoint_text, std::string out,
            std::string csv, unsigned threads) {
    auto config = ExperimentConfig::load(path);
    if (!limit_text.empty()) config.limit = parse_count(limit_text);
    if (!checkpoint_text.empty()) {
        config.checkpoints.clear();
        for (const auto& t : checkpoint_text) config.checkpoints.push_back(parse_count(t));
    }
    if (!out.empty()) config.out = out;
    if (!csv.empty()) config.csv = csv;
    if (!config.limit) throw UsageError("no limit: pass --limit or set 'limit' in the config");

    const auto ex = build_experiment(config);
    const RsConvolution rs(ex.pi, ex.pi_prime);
    const double tau0 = rs.pairs().tau0.value_or(rs.tau_shift());
    PsiOptions options;
    options.threads = threads;
    if (config.chunk) options.chunk = *config.chunk;
    const auto report = psi_sum(rs, *config.limit, config.checkpoints, rs.multiplicity(), tau0, options);

    Json j = provenance(config.hash());
    j["config"] = config.to_text();
    j["T"] = to_json(rs.pairs(), rs);
    j["flags"] = to_json(rs.flags());
    j["report"] = to_json(report);
    j["decay_check"] = report.checkpoints.size() >= 4 && report.checkpoints.back().x >= 100 * report.checkpoints.front().x
                           ? Json(decay_check(report))
                           : Json(nullptr);
    const std::string text = j.dump(2) + "\n";
    if (!config.out.empty()) write_file(config.out, text);
    std::cout << text;
    if (!config.csv.empty()) {
        std::ostringstream os;
        os << csv_banner(config.hash()) << "\n" << csv_row({"x", "re_psi", "im_psi", "re_pred", "im_pred", "rel_error"});
        for (const auto& c : report.checkpoints)
            os << csv_row({std::to_string(c.x), format_double(c.psi.real()), format_double(c.psi.imag()), format_double(c.predicted.real()),
                           format_double(c.predicted.imag()), format_double(c.rel_error)});
        write_file(config.csv, os.str());
    }
    return 0;
}

int cmd_verify(unsigned threads) {
    const auto results = run_property_suite({threads});
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << r.detail << "\n";
        ok = ok && r.passed;
    }
    std::cout << (ok ? "all properties hold\n" : "verification failed\n");
    return ok ? 0 : kVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bclab: base-change Rankin-Selberg laboratory for abelian fields"};
    app.set_version_flag("--version", std::string(kArtifactVersion));
    app.require_subcommand(1);

    Source field_src, bc_src, coeffs_src;
    u64 primes_limit = 100;
    bool field_json = false;
    auto* field = app.add_subcommand("field", "splitting table of a field as CSV (p,f_p,g_p,ramified)");
    field_src.attach(field, false);
    field->add_option("--primes", primes_limit, "largest prime listed");
    field->add_flag("--json", field_json, "print the field itself as JSON");

    u64 char_modulus = 0, char_upto = 0;
    std::vector<i64> char_exps;
    auto* chr = app.add_subcommand("char", "a Dirichlet character as JSON");
    chr->add_option("--modulus", char_modulus, "modulus")->required();
    chr->add_option("--exp", char_exps, "exponent vector")->allow_extra_args(false)->delimiter(',');
    chr->add_option("--values", char_upto, "list values at n = 1..N");

    auto* bc = app.add_subcommand("bc", "base-change fiber of pi as JSON");
    bc_src.attach(bc, true);

    u64 coeffs_limit = 100;
    auto* coeffs = app.add_subcommand("coeffs", "coefficients a(n) of pi over E as CSV (n,re,im)");
    coeffs_src.attach(coeffs, true);
    coeffs->add_option("--limit", coeffs_limit, "largest n");

    std::string rs_config, rs_csv;
    u64 rs_limit = 1000;
    auto* rs = app.add_subcommand("rs", "twisted pairs, multiplicity and theorem flags as JSON");
    rs->add_option("--config", rs_config, "experiment config file")->required();
    rs->add_option("--csv", rs_csv, "write convolution coefficients to this CSV");
    rs->add_option("--limit", rs_limit, "largest n in the coefficient CSV");

    u64 count_l = 0, count_lp = 0, count_s = 0, count_r = 1;
    auto* count = app.add_subcommand("count", "predicted |T| for each theorem branch as JSON");
    count->add_option("--l", count_l, "degree of E")->required();
    count->add_option("--lprime", count_lp, "degree of F")->required();
    count->add_option("--s", count_s, "eta exponent in the non-cuspidal relation");
    count->add_option("--r", count_r, "psi exponent in the non-cuspidal relation (nonzero)");

    std::string pnt_config, pnt_limit, pnt_out, pnt_csv;
    std::vector<std::string> pnt_checkpoints;
    auto* pnt = app.add_subcommand("pnt", "psi(x) against the predicted main term");
    pnt->add_option("--config", pnt_config, "experiment config file")->required();
    pnt->add_option("--limit", pnt_limit, "largest x, e.g. 1e7");
    pnt->add_option("--checkpoints", pnt_checkpoints, "checkpoint list (default powers of ten from 10^4)");
    pnt->add_option("--out", pnt_out, "write the JSON report here");
    pnt->add_option("--csv", pnt_csv, "write the checkpoint trace here");

    auto* verify = app.add_subcommand("verify", "run the property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        const unsigned threads = thread_cap();
        if (*field) return cmd_field(field_src, primes_limit, field_json);
        if (*chr) return cmd_char(char_modulus, char_exps, char_upto);
        if (*bc) return cmd_bc(bc_src);
        if (*coeffs) return cmd_coeffs(coeffs_src, coeffs_limit);
        if (*rs) return cmd_rs(rs_config, rs_csv, rs_limit);
        if (*count) return cmd_count(count_l, count_lp, count_s, count_r);
        if (*pnt) return cmd_pnt(pnt_config, pnt_limit, pnt_checkpoints, pnt_out, pnt_csv, threads);
        if (*verify) return cmd_verify(threads);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
