#include "entrobound/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "entrobound/bounds.hpp"
#include "entrobound/error.hpp"
#include "entrobound/matrix_io.hpp"
#include "entrobound/npim.hpp"
#include "entrobound/qubit.hpp"
#include "entrobound/report_io.hpp"
#include "entrobound/verify.hpp"

namespace entrobound::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSeedEnv = "ENTROBOUND_RNG_SEED";

struct Options {
    std::string command;
    std::string gen;
    std::string matrix;
    double s = 1.95;
    double max_s = kDefaultMaxS;
    std::string s_grid = "1.1:1.9:0.1";
    std::string dims = "2..16";
    std::string phi_grid = "0.02:0.78:0.02";
    int seeds = 1000;
    double epsilon = 1e-12;
    int max_iters = 10'000;
    std::uint64_t mc_states = 100'000;
    std::optional<std::uint64_t> rng_seed;
    std::string format = "csv";
    std::string out;
    std::string manifest;
    std::string suite;
    std::string replay_file;
};

struct Source {
    OverlapUnitary unitary;
    std::optional<std::uint64_t> unitary_seed;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

double to_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "cannot parse " + what + " '" + text + "'");
    }
}

std::uint64_t to_uint(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used);
        if (used != text.size() || text.starts_with('-')) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "cannot parse " + what + " '" + text + "'");
    }
}

Source parse_generator(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw Error(ErrorKind::Parse, "empty generator spec");
    const std::string& kind = parts[0];
    if (kind == "haar" && parts.size() == 3) {
        const auto d = to_uint(parts[1], "dimension");
        const auto seed = to_uint(parts[2], "seed");
        return {haar_unitary(d, seed), seed};
    }
    if (kind == "fourier" && parts.size() == 2) return {fourier_unitary(to_uint(parts[1], "dimension")), {}};
    if (kind == "rotation" && parts.size() == 2)
        return {OverlapUnitary(rotation_matrix(to_double(parts[1], "angle"))), {}};
    if (kind == "identity" && parts.size() == 2) {
        const auto d = to_uint(parts[1], "dimension");
        if (d < 1) throw Error(ErrorKind::InvalidDimension, "identity needs d >= 1");
        return {OverlapUnitary(ComplexMatrix::identity(d)), {}};
    }
    throw Error(ErrorKind::Parse,
                "unknown generator '" + spec + "' (expected haar:d:seed | fourier:d | rotation:phi | identity:d)");
}

/// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_grid(const std::string& spec, const std::string& what) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw Error(ErrorKind::Parse, what + " must look like a:b:step, got '" + spec + "'");
    const double a = to_double(parts[0], what), b = to_double(parts[1], what), step = to_double(parts[2], what);
    if (!(step > 0.0) || b < a) throw Error(ErrorKind::Parse, what + " needs step > 0 and a <= b");
    const auto n = static_cast<long long>(std::floor((b - a) / step + 1e-9));
    std::vector<double> grid;
    for (long long k = 0; k <= n; ++k) grid.push_back(a + static_cast<double>(k) * step);
    return grid;
}

/// "a..b" or a comma list.
std::vector<std::size_t> parse_dims(const std::string& spec) {
    std::vector<std::size_t> dims;
    if (const auto pos = spec.find(".."); pos != std::string::npos) {
        const auto lo = to_uint(spec.substr(0, pos), "dimension");
        const auto hi = to_uint(spec.substr(pos + 2), "dimension");
        if (hi < lo) throw Error(ErrorKind::Parse, "dimension range must be increasing");
        for (auto d = lo; d <= hi; ++d) dims.push_back(d);
    } else {
        for (const auto& p : split(spec, ',')) dims.push_back(to_uint(p, "dimension"));
    }
    if (dims.empty()) throw Error(ErrorKind::Parse, "no dimensions given");
    return dims;
}

NpimConfig npim_config(const Options& o, double s) {
    NpimConfig c;
    c.s = s;
    c.epsilon = o.epsilon;
    c.max_iterations = o.max_iters;
    c.n_seeds = o.seeds;
    c.rng_seed = *o.rng_seed;
    c.validate();
    return c;
}

Source load_source(const Options& o) {
    if (!o.gen.empty() && !o.matrix.empty()) throw Error(ErrorKind::InvalidArgument, "use either --gen or --matrix");
    if (!o.gen.empty()) return parse_generator(o.gen);
    if (!o.matrix.empty()) return {OverlapUnitary(load_matrix_file(o.matrix)), {}};
    throw Error(ErrorKind::InvalidArgument, "a matrix source is required (--gen or --matrix)");
}

void check_s_limit(double s, double max_s) {
    if (s > max_s)
        throw Error(ErrorKind::OutOfRange, "s=" + format_number(s) + " exceeds the limit " + format_number(max_s) +
                                               " (raise --max-s to override)");
}

std::string render(const Options& o, const std::string& csv_header, const std::vector<std::string>& csv_rows,
                   const json& records) {
    if (o.format == "json") return records.dump(2) + "\n";
    std::string text(csv_header);
    text += "\n";
    for (const auto& row : csv_rows) text += row + "\n";
    return text;
}

std::string cmd_bound(const Options& o) {
    const auto src = load_source(o);
    auto report = build_report(src.unitary, npim_config(o, o.s), o.mc_states, *o.rng_seed, o.max_s);
    report.unitary_seed = src.unitary_seed;
    return render(o, std::string(kBoundCsvHeader), {bound_csv_row(report)}, bound_json(report));
}

std::string cmd_sweep_s(const Options& o) {
    const auto src = load_source(o);
    const auto& u = src.unitary;
    const auto grid = parse_grid(o.s_grid, "--s-grid");
    for (double s : grid) check_s_limit(s, o.max_s);
    const double mu = maassen_uffink(u);
    std::optional<double> mc_entropy;
    if (o.mc_states > 0) mc_entropy = montecarlo_min_entropy(u, 1.0, 1.0, o.mc_states, *o.rng_seed).value;

    std::vector<std::string> rows;
    json records = json::array();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto cfg = npim_config(o, grid[k]);
        SweepSRow row;
        row.s = grid[k];
        row.mu_bound = mu;
        row.montecarlo_min_entropy = mc_entropy;
        std::vector<AmplitudeVector> extra;
        if (o.mc_states > 0) {
            // The Monte-Carlo argmax also seeds NPIM, so the NPIM column can
            // never fall behind the Monte-Carlo one.
            auto mc = montecarlo_norm(u, cfg.holder(), o.mc_states, derive_seed(*o.rng_seed, k));
            row.gamma_montecarlo = bound_from_norm(grid[k], mc.value);
            extra.push_back(std::move(mc.argmax_state));
        }
        const auto est = npim_norm(u, cfg, extra);
        row.gamma_npim = bound_from_norm(grid[k], est.value);
        row.certified = est.certified;
        rows.push_back(sweep_s_csv_row(row));
        records.push_back(sweep_s_json(row));
    }
    return render(o, std::string(kSweepSCsvHeader), rows, records);
}

std::string cmd_sweep_dim(const Options& o) {
    const auto dims = parse_dims(o.dims);
    const auto reports = dimension_sweep(dims, npim_config(o, o.s), o.mc_states, o.max_s);
    std::vector<std::string> rows;
    json records = json::array();
    for (const auto& r : reports) {
        rows.push_back(bound_csv_row(r));
        records.push_back(bound_json(r));
    }
    return render(o, std::string(kBoundCsvHeader), rows, records);
}

std::string cmd_qubit_curve(const Options& o) {
    auto grid = parse_grid(o.phi_grid, "--phi-grid");
    constexpr double quarter = std::numbers::pi / 4.0;
    std::vector<std::string> rows;
    json records = json::array();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double phi = grid[k];
        // Grids written with a rounded pi/4 endpoint land a hair outside the domain.
        if (phi > quarter && phi < quarter + 1e-4) phi = quarter;
        QubitCurveRow row;
        row.bound = qubit::qubit_bound(phi);
        if (o.mc_states > 0 && phi > 0.0)
            row.montecarlo_min = qubit::montecarlo_qubit_min(phi, o.mc_states, derive_seed(*o.rng_seed, k));
        rows.push_back(qubit_csv_row(row));
        records.push_back(qubit_json(row));
    }
    return render(o, std::string(kQubitCsvHeader), rows, records);
}

std::vector<std::string> canonical_args(const Options& o) {
    std::vector<std::string> a{o.command};
    auto put = [&a](const std::string& flag, const std::string& value) {
        a.push_back(flag);
        a.push_back(value);
    };
    if (o.command == "verify") a.push_back(o.suite);
    if (!o.gen.empty()) put("--gen", o.gen);
    if (!o.matrix.empty()) put("--matrix", o.matrix);
    put("--s", format_number(o.s));
    put("--max-s", format_number(o.max_s));
    put("--s-grid", o.s_grid);
    put("--dims", o.dims);
    put("--phi-grid", o.phi_grid);
    put("--seeds", std::to_string(o.seeds));
    put("--epsilon", format_number(o.epsilon));
    put("--max-iters", std::to_string(o.max_iters));
    put("--mc-states", std::to_string(o.mc_states));
    put("--rng-seed", std::to_string(*o.rng_seed));
    put("--format", o.format);
    return a;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

RunManifest make_manifest(const Options& o) {
    RunManifest m;
    m.command = o.command;
    m.args = canonical_args(o);
    m.parameters = {{"s", o.s},           {"max_s", o.max_s},         {"s_grid", o.s_grid},
                    {"dims", o.dims},     {"phi_grid", o.phi_grid},   {"n_seeds", o.seeds},
                    {"epsilon", o.epsilon}, {"max_iterations", o.max_iters}, {"mc_states", o.mc_states},
                    {"rng_seed", *o.rng_seed}, {"format", o.format}};
    if (!o.gen.empty()) m.parameters["gen"] = o.gen;
    if (!o.matrix.empty()) {
        m.parameters["matrix"] = o.matrix;
        m.input_sha256 = sha256_file(o.matrix);
    }
    if (!o.suite.empty()) m.parameters["suite"] = o.suite;
    m.tool_version = kVersion;
    m.timestamp = utc_timestamp();
    return m;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

void add_common_options(CLI::App* sub, Options& o) {
    sub->add_option("--gen", o.gen, "Generator: haar:d:seed | fourier:d | rotation:phi | identity:d");
    sub->add_option("--matrix", o.matrix, "JSON matrix file {\"d\",\"re\",\"im\"}");
    sub->add_option("--s", o.s, "Hoelder exponent s in (1,2)");
    sub->add_option("--max-s", o.max_s, "Reject s above this limit (2 - delta)");
    sub->add_option("--s-grid", o.s_grid, "s grid a:b:step");
    sub->add_option("--dims", o.dims, "Dimensions a..b or comma list");
    sub->add_option("--phi-grid", o.phi_grid, "Angle grid a:b:step (radians)");
    sub->add_option("--seeds", o.seeds, "NPIM random seed states");
    sub->add_option("--epsilon", o.epsilon, "NPIM convergence threshold");
    sub->add_option("--max-iters", o.max_iters, "NPIM iteration cap per seed");
    sub->add_option("--mc-states", o.mc_states, "Monte-Carlo states (0 disables)");
    sub->add_option("--rng-seed", o.rng_seed, "Root random seed (default $ENTROBOUND_RNG_SEED or 0)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write output to FILE (plus FILE.manifest.json)");
    sub->add_option("--manifest", o.manifest, "Also write the run manifest to FILE");
}

int execute(Options o, std::ostream& out, std::ostream& err);

int run_replay(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.replay_file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open manifest '" + o.replay_file + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    const auto m = manifest_from_json(doc);
    if (!m.input_sha256.empty()) {
        const auto path = m.parameters.value("matrix", std::string());
        if (sha256_file(path) != m.input_sha256)
            throw Error(ErrorKind::InvalidArgument, "input file '" + path + "' changed since the manifest was written");
    }
    auto args = m.args;
    if (!o.out.empty()) {
        args.push_back("--out");
        args.push_back(o.out);
    }
    return run(args, out, err);
}

int execute(Options o, std::ostream& out, std::ostream& err) {
    if (!o.rng_seed) {
        if (const char* env = std::getenv(kSeedEnv); env && *env)
            o.rng_seed = to_uint(env, kSeedEnv);
        else
            o.rng_seed = 0;
    }

    if (o.command == "replay") return run_replay(o, out, err);

    std::string text;
    int code = kSuccess;
    if (o.command == "bound") {
        text = cmd_bound(o);
    } else if (o.command == "sweep-s") {
        text = cmd_sweep_s(o);
    } else if (o.command == "sweep-dim") {
        text = cmd_sweep_dim(o);
    } else if (o.command == "qubit-curve") {
        text = cmd_qubit_curve(o);
    } else if (o.command == "verify") {
        verify::SuiteOptions so;
        so.rng_seed = *o.rng_seed;
        so.n_seeds = std::min(o.seeds, 200);
        const auto result = verify::run_suite(o.suite, so);
        if (!result) {
            err << "unknown suite '" << o.suite << "'\n";
            return kInputError;
        }
        text = verify::to_json(*result).dump(2) + "\n";
        if (!result->passed()) code = kVerificationFailure;
    }

    if (o.out.empty()) {
        out << text;
    } else {
        write_file(o.out, text);
        write_file(o.out + ".manifest.json", to_json(make_manifest(o)).dump(2) + "\n");
    }
    if (!o.manifest.empty()) write_file(o.manifest, to_json(make_manifest(o)).dump(2) + "\n");
    return code;
}

} // namespace

json to_json(const RunManifest& m) {
    return {{"command", m.command},       {"args", m.args},
            {"parameters", m.parameters}, {"input_sha256", m.input_sha256},
            {"tool", "entrobound"},       {"tool_version", m.tool_version},
            {"timestamp", m.timestamp}};
}

RunManifest manifest_from_json(const json& j) {
    RunManifest m;
    try {
        m.command = j.at("command").get<std::string>();
        m.args = j.at("args").get<std::vector<std::string>>();
        m.parameters = j.value("parameters", json::object());
        m.input_sha256 = j.value("input_sha256", std::string());
        m.tool_version = j.value("tool_version", std::string());
        m.timestamp = j.value("timestamp", std::string());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed manifest: ") + e.what());
    }
    if (m.args.empty() || m.args.front() != m.command) throw Error(ErrorKind::Parse, "manifest args do not match command");
    return m;
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    char buf[1 << 14];
    while (in) {
        in.read(buf, sizeof buf);
        EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    std::ostringstream hex;
    for (unsigned int k = 0; k < len; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
    return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropic uncertainty bounds from the overlap matrix of two observables", "entrobound"};
    app.require_subcommand(1);
    Options o;

    struct Cmd {
        const char* name;
        const char* help;
    };
    const Cmd commands[] = {
        {"bound", "Maassen-Uffink, tight bound and baselines for one matrix"},
        {"sweep-s", "Bound versus s for one matrix (NPIM and Monte-Carlo columns)"},
        {"sweep-dim", "Bounds for one Haar unitary per dimension"},
        {"qubit-curve", "Qubit bound versus rotation angle with Monte-Carlo validation"},
    };
    for (const auto& c : commands) add_common_options(app.add_subcommand(c.name, c.help), o);
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite and print a JSON verdict");
    verify_cmd->add_option("suite", o.suite, "norms | entropy-identities | ordering-chain | interpolation | qubit | tightness")
        ->required();
    add_common_options(verify_cmd, o);
    auto* replay_cmd = app.add_subcommand("replay", "Re-run a saved manifest");
    replay_cmd->add_option("manifest", o.replay_file, "Manifest JSON")->required();
    replay_cmd->add_option("--out", o.out, "Write output to FILE");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        return execute(o, out, err);
    } catch (const Error& e) {
        err << "entrobound: " << e.what() << "\n";
        return e.kind() == ErrorKind::NonConvergence ? kNonConvergence : kInputError;
    } catch (const std::logic_error& e) {
        err << "entrobound: invariant violated: " << e.what() << "\n";
        return kVerificationFailure;
    }
}

} // namespace entrobound::cli
