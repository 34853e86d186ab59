#include "bclab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bclab {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

i64 parse_int(std::string_view s) {
    i64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

double parse_real(std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("expected a real number, got '" + std::string(s) + "'");
    return v;
}

} // namespace

u64 parse_count(std::string_view text) {
    text = trim(text);
    if (text.find_first_of(".eE") == std::string_view::npos) {
        const i64 v = parse_int(text);
        if (v < 0) throw std::invalid_argument("expected a non-negative count, got '" + std::string(text) + "'");
        return static_cast<u64>(v);
    }
    const double v = parse_real(text);
    if (v < 0 || v > 1e18 || std::floor(v) != v) throw std::invalid_argument("expected a whole count, got '" + std::string(text) + "'");
    return static_cast<u64>(v);
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
    ExperimentConfig c;
    std::size_t line_no = 0;
    bool have_e = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "expected key=value, got '" + std::string(line) + "'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw ConfigError(line_no, "empty value for '" + key + "'");

        auto field_of = [&]() -> FieldSpec& {
            if (key[0] == 'E') return c.e;
            if (!c.f) c.f.emplace();
            return *c.f;
        };
        auto char_of = [&]() -> CharSpec& { return key.rfind("piprime.", 0) == 0 ? c.pi_prime : c.pi; };

        try {
            if (key == "E.modulus" || key == "F.modulus") {
                const i64 m = parse_int(value);
                if (m < 1) throw std::invalid_argument("modulus must be positive");
                field_of().modulus = static_cast<u64>(m);
                if (key[0] == 'E') have_e = true;
            } else if (key == "E.gen" || key == "F.gen") {
                field_of().gens.push_back(parse_int(value));
            } else if (key == "pi.modulus" || key == "piprime.modulus") {
                const i64 m = parse_int(value);
                if (m < 1) throw std::invalid_argument("modulus must be positive");
                char_of().modulus = static_cast<u64>(m);
            } else if (key == "pi.char" || key == "piprime.char") {
                char_of().exponents.push_back(parse_int(value));
            } else if (key == "pi.tau" || key == "piprime.tau") {
                char_of().tau = parse_real(value);
            } else if (key == "pi.rank" || key == "piprime.rank") {
                const i64 r = parse_int(value);
                if (r < 1) throw std::invalid_argument("rank must be positive");
                char_of().rank = static_cast<unsigned>(r);
            } else if (key == "limit") {
                c.limit = parse_count(value);
            } else if (key == "checkpoint") {
                c.checkpoints.push_back(parse_count(value));
            } else if (key == "chunk") {
                c.chunk = parse_count(value);
            } else if (key == "out") {
                c.out = std::string(value);
            } else if (key == "csv") {
                c.csv = std::string(value);
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(line_no, e.what());
        }
    }
    if (!have_e) throw ConfigError(0, "missing required key 'E.modulus'");
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream os;
    auto field = [&](const char* name, const FieldSpec& s) {
        os << name << ".modulus=" << s.modulus << '\n';
        for (i64 g : s.gens) os << name << ".gen=" << g << '\n';
    };
    auto character = [&](const char* name, const CharSpec& s) {
        if (s.modulus) os << name << ".modulus=" << *s.modulus << '\n';
        for (i64 e : s.exponents) os << name << ".char=" << e << '\n';
        os << name << ".tau=" << format_double(s.tau) << '\n';
        os << name << ".rank=" << s.rank << '\n';
    };
    field("E", e);
    if (f) field("F", *f);
    character("pi", pi);
    character("piprime", pi_prime);
    if (limit) os << "limit=" << *limit << '\n';
    for (u64 x : checkpoints) os << "checkpoint=" << x << '\n';
    if (chunk) os << "chunk=" << *chunk << '\n';
    if (!out.empty()) os << "out=" << out << '\n';
    if (!csv.empty()) os << "csv=" << csv << '\n';
    return os.str();
}

std::string fnv1a_hex(std::string_view bytes) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string ExperimentConfig::hash() const { return fnv1a_hex(to_text()); }

namespace {

GalHeckeChar build_character(const char* name, const CharSpec& spec, const AbelianField& field, const char* field_name) {
    if (spec.modulus && *spec.modulus != field.modulus())
        throw ConfigError(0, std::string("inconsistent moduli: ") + name + ".modulus=" + std::to_string(*spec.modulus) + " but " +
                                 field_name + ".modulus=" + std::to_string(field.modulus()));
    const auto group = field.ambient();
    std::vector<i64> exps = spec.exponents;
    if (exps.empty()) exps.assign(group->rank(), 0);
    if (exps.size() != group->rank())
        throw ConfigError(0, std::string(name) + ".char has " + std::to_string(exps.size()) + " entries but the unit group mod " +
                                 std::to_string(field.modulus()) + " (" + field_name + ".modulus) has " + std::to_string(group->rank()) +
                                 " generators");
    const TwistedChar chi{DirichletChar(group, std::move(exps)), spec.tau};
    const GalHeckeChar bc = base_change(chi, field);
    try {
        return GalHeckeChar::cuspidal(bc.field(), bc.omega(), bc.tau(), spec.rank);
    } catch (const std::domain_error& e) {
        throw ConfigError(0, std::string(name) + ": " + e.what());
    }
}

} // namespace

Experiment build_experiment(const ExperimentConfig& config) {
    auto make = [](const FieldSpec& s, const char* name) {
        try {
            return AbelianField::make(s.modulus, s.gens);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(0, std::string(name) + ": " + e.what());
        }
    };
    AbelianField e = make(config.e, "E");
    AbelianField f = config.f ? make(*config.f, "F") : e;
    GalHeckeChar pi = build_character("pi", config.pi, e, "E");
    GalHeckeChar pi_prime = build_character("piprime", config.pi_prime, f, config.f ? "F" : "E");
    return {std::move(e), std::move(f), std::move(pi), std::move(pi_prime)};
}

} // namespace bclab
