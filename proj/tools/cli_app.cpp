#include "cli_app.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace schubres::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    int m = 0;
    std::string w;
    bool determinantal = false;
    int k = 0;
    int s = 0;
    std::string format = "text";
    bool no_normalize = false;
    std::string out_path;
    std::string n_range;
    std::string m_range;
};

void add_target_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n", opt.n, "rank of the subspace (n)")->required();
    cmd->add_option("--m", opt.m, "codimension (m), N = n + m")->required();
    cmd->add_option("--w", opt.w, "increasing entries a1,...,an");
    cmd->add_flag("--determinantal", opt.determinantal, "use the rank <= k locus instead of --w");
    cmd->add_option("--k", opt.k, "rank bound for --determinantal");
}

void add_output_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out_path, "write the report to a file");
}

GrassPerm target_of(const Options& opt) {
    if (opt.determinantal) {
        if (!opt.w.empty()) throw UsageError("--w and --determinantal are mutually exclusive");
        if (opt.k == 0) throw UsageError("--determinantal needs --k");
        return determinantal_w(opt.k, opt.m, opt.n);
    }
    if (opt.w.empty()) throw UsageError("give either --w a1,...,an or --determinantal --k K");
    return GrassPerm(parse_sequence(opt.w), opt.n, opt.m);
}

std::string polynomial_text(const std::vector<BigInt>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        const BigInt& c = coeffs[d];
        if (c == 0) continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || d == 0) os << mag.str();
        if (d >= 1) os << 't';
        if (d >= 2) os << '^' << d;
    }
    return first ? "0" : os.str();
}

json coordinates_json(const CoordinateSet& set) {
    json arr = json::array();
    for (const auto& [i, j] : set) arr.push_back({i, j});
    return arr;
}

std::string coordinates_text(const CoordinateSet& set) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, j] : set) {
        os << (first ? "" : " ") << '(' << i << ',' << j << ')';
        first = false;
    }
    return os.str();
}

void emit(const Options& opt, const std::string& body, std::ostream& out) {
    if (opt.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(opt.out_path);
    if (!file) throw UsageError("cannot open " + opt.out_path + " for writing");
    file << body;
}

int run_resolve(const Options& opt, std::ostream& out, std::ostream& err) {
    const GrassPerm w = target_of(opt);
    const std::string why = class_violation(w);
    if (!why.empty()) {
        err << "error: " << w.to_string() << " is not in W_r: " << why << '\n';
        return kMembership;
    }
    const ResolutionReport report = resolve(w, !opt.no_normalize);
    emit(opt, opt.format == "json" ? resolution_json(report).dump(2) + "\n" : resolution_text(report), out);
    if (!report.checks.all_passed()) {
        for (const auto& c : report.checks.checks)
            if (!c.passed) err << "validation failed: " << c.id << " (" << c.detail << ")\n";
        return kConsistency;
    }
    return kOk;
}

int run_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto n_range = parse_range(opt.n_range);
    const auto m_range = parse_range(opt.m_range);
    if (n_range.first < 2) throw UsageError("sweep needs n >= 2 (W_r requires 1 <= r <= n-1)");
    if (m_range.first < 1) throw UsageError("sweep needs m >= 1");
    if (n_range.second > 8 || m_range.second > 8) throw UsageError("sweep bounds are limited to n, m <= 8");

    const auto rows = sweep(n_range, m_range, default_threads(), !opt.no_normalize);
    int agree = 0;
    int disagree = 0;
    int failures = 0;
    for (const auto& row : rows) {
        if (!row.error.empty() || !row.validated)
            ++failures;
        else if (row.agrees())
            ++agree;
        else
            ++disagree;
    }

    std::ostringstream body;
    if (opt.format == "json") {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["kind"] = "sweep";
        json results = json::array();
        for (const auto& row : rows) {
            json entry;
            entry["w"] = row.w.entries();
            entry["n"] = row.w.n();
            entry["m"] = row.w.m();
            entry["r"] = row.r;
            entry["regularity"] = row.regularity;
            entry["conjectured_regularity"] = row.conjectured;
            entry["validated"] = row.validated;
            entry["verdict"] = !row.error.empty() ? "ERROR" : row.agrees() ? "AGREE" : "COUNTEREXAMPLE";
            if (!row.error.empty()) entry["error"] = row.error;
            results.push_back(std::move(entry));
        }
        doc["results"] = std::move(results);
        doc["summary"] = {{"total", rows.size()},
                          {"agree", agree},
                          {"counterexamples", disagree},
                          {"validation_failures", failures}};
        body << doc.dump(2) << '\n';
    } else {
        body << std::left << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(24) << "w" << std::setw(4)
             << "r" << std::setw(6) << "reg" << std::setw(6) << "conj" << "verdict\n";
        for (const auto& row : rows) {
            body << std::setw(4) << row.w.n() << std::setw(4) << row.w.m() << std::setw(24) << row.w.to_string()
                 << std::setw(4) << row.r << std::setw(6) << row.regularity << std::setw(6) << row.conjectured;
            if (!row.error.empty())
                body << "ERROR " << row.error;
            else
                body << (row.agrees() ? "AGREE" : "COUNTEREXAMPLE") << (row.validated ? "" : " (validation failed)");
            body << '\n';
        }
        body << "summary: " << rows.size() << " computed, " << agree << " agree, " << disagree
             << " counterexamples, " << failures << " validation failures\n";
    }
    emit(opt, body.str(), out);
    if (disagree > 0) err << "note: " << disagree << " counterexample(s) to the regularity formula\n";
    return failures > 0 ? kConsistency : kOk;
}

int run_check_smooth(const Options& opt, std::ostream& out, std::ostream& err) {
    const GrassPerm w = target_of(opt);
    if (w.n() < 2) throw UsageError("check-smooth needs n >= 2");
    const int r = r_of(w);
    const int s = opt.s == 0 ? std::min(r, w.n() - 1) : opt.s;
    if (s < 1 || s > r || s > w.n() - 1)
        throw UsageError("--s must satisfy 1 <= s <= min(r(w), n-1) = " + std::to_string(std::min(r, w.n() - 1)));

    const Permutation tilde = w_tilde(w, s);
    const Permutation top = w_max(w, s);
    const int tangent = tangent_dimension(w, s);
    const bool by_tangent = is_smooth_by_tangent_space(w, s);
    const bool by_patterns = is_smooth_by_patterns(w, s);

    std::ostringstream body;
    if (opt.format == "json") {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["kind"] = "check-smooth";
        doc["w"] = w.entries();
        doc["n"] = w.n();
        doc["m"] = w.m();
        doc["s"] = s;
        doc["w_tilde"] = tilde.values();
        doc["w_max"] = top.values();
        doc["length"] = tilde.inversions();
        doc["tangent_dimension"] = tangent;
        doc["smooth_by_tangent_space"] = by_tangent;
        doc["smooth_by_patterns"] = by_patterns;
        if (by_tangent) {
            const auto coords = linearity_coordinates(w, s);
            doc["fiber_coordinates"] = coordinates_json(coords.fiber);
            doc["base_coordinates"] = coordinates_json(coords.base);
        }
        body << doc.dump(2) << '\n';
    } else {
        body << "w = " << w.to_string() << "  n = " << w.n() << "  m = " << w.m() << "  s = " << s << '\n'
             << "minimal representative: " << tilde.to_string() << "  length " << tilde.inversions() << '\n'
             << "maximal representative: " << top.to_string() << '\n'
             << "tangent dimension: " << tangent << '\n'
             << "smooth (tangent space): " << (by_tangent ? "yes" : "no") << '\n'
             << "smooth (4231/3412 avoidance): " << (by_patterns ? "yes" : "no") << '\n';
        if (by_tangent) {
            const auto coords = linearity_coordinates(w, s);
            body << "fiber coordinates (" << coords.fiber.size() << "): " << coordinates_text(coords.fiber) << '\n'
                 << "base coordinates (" << coords.base.size() << "): " << coordinates_text(coords.base) << '\n';
        }
    }
    emit(opt, body.str(), out);
    if (by_tangent != by_patterns) {
        err << "error: smoothness routes disagree\n";
        return kConsistency;
    }
    return kOk;
}

}  // namespace

std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list: \"" + text + "\"");
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size()) throw std::invalid_argument("malformed integer list: \"" + text + "\"");
        out.push_back(value);
    }
    if (out.empty() || text.back() == ',') throw std::invalid_argument("malformed integer list: \"" + text + "\"");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed range: \"" + text + "\"");
        }
        if (used != part.size()) throw std::invalid_argument("malformed range: \"" + text + "\"");
        return value;
    };
    if (dots == std::string::npos) {
        const int v = number(text);
        return {v, v};
    }
    const int lo = number(text.substr(0, dots));
    const int hi = number(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range: \"" + text + "\"");
    return {lo, hi};
}

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::string betti_grid(const BettiTable& betti) {
    int max_i = 0;
    int max_row = 0;
    for (const auto& [key, value] : betti.entries) {
        if (value == 0) continue;
        max_i = std::max(max_i, key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    std::vector<std::string> header{""};
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i <= max_i; ++i) header.push_back(std::to_string(i));
    std::vector<std::string> totals{"total:"};
    for (int i = 0; i <= max_i; ++i) totals.push_back(betti.total(i).str());
    cells.push_back(header);
    cells.push_back(totals);
    for (int row = 0; row <= max_row; ++row) {
        std::vector<std::string> line{std::to_string(row) + ":"};
        for (int i = 0; i <= max_i; ++i) {
            const BigInt v = betti.rank(i, i + row);
            line.push_back(v == 0 ? "." : v.str());
        }
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> width(static_cast<std::size_t>(max_i) + 2, 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto& line : cells) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) text += ' ';
            text += std::string(width[c] - line[c].size(), ' ') + line[c];
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << '\n';
    }
    return os.str();
}

json resolution_json(const ResolutionReport& report) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "resolve";
    doc["w"] = report.w.entries();
    doc["n"] = report.w.n();
    doc["m"] = report.w.m();
    doc["r"] = report.r;

    json bundle = json::object();
    for (const auto& [i, m] : report.bundle.multiplicities()) bundle[std::to_string(i)] = m;
    doc["bundle"] = std::move(bundle);
    json computed = json::object();
    for (const auto& [i, m] : report.computed_bundle.multiplicities()) computed[std::to_string(i)] = m;
    doc["computed_bundle"] = std::move(computed);

    json cohomology = json::array();
    for (const auto& [key, terms] : report.cohomology.entries) {
        json entry;
        entry["t"] = key.first;
        entry["j"] = key.second;
        entry["dimension"] = big_to_json(report.cohomology.dimension(key.first, key.second));
        json summands = json::array();
        for (const auto& [gamma, mult] : terms)
            summands.push_back({{"partition", gamma.parts()}, {"multiplicity", big_to_json(mult)}});
        entry["summands"] = std::move(summands);
        cohomology.push_back(std::move(entry));
    }
    doc["cohomology"] = std::move(cohomology);

    json betti = json::array();
    for (const auto& [key, rank] : report.betti.entries) {
        if (rank == 0) continue;
        betti.push_back({{"i", key.first}, {"d", key.second}, {"rank", big_to_json(rank)}});
    }
    doc["betti"] = std::move(betti);

    const int codim = report.w.m() * report.w.n() - length(report.w);
    doc["codim"] = codim;
    if (report.hilbert) {
        json numerator = json::array();
        for (const auto& c : report.hilbert->numerator) numerator.push_back(big_to_json(c));
        json reduced = json::array();
        for (const auto& c : report.hilbert->reduced_numerator) reduced.push_back(big_to_json(c));
        doc["hilbert_numerator"] = std::move(numerator);
        doc["reduced_numerator"] = std::move(reduced);
        doc["multiplicity"] = big_to_json(report.hilbert->multiplicity);
    } else {
        doc["hilbert_numerator"] = nullptr;
        doc["multiplicity"] = nullptr;
        doc["hilbert_error"] = report.hilbert_error;
    }
    doc["regularity"] = report.regularity;
    doc["conjectured_regularity"] = report.conjectured_regularity;

    json checks = json::object();
    for (const auto& c : report.checks.checks) checks[c.id] = {{"passed", c.passed}, {"detail", c.detail}};
    doc["checks"] = std::move(checks);
    return doc;
}

std::string resolution_text(const ResolutionReport& report) {
    std::ostringstream os;
    const int codim = report.w.m() * report.w.n() - length(report.w);
    os << "w = " << report.w.to_string() << "  n = " << report.w.n() << "  m = " << report.w.m()
       << "  r = " << report.r << '\n';
    os << "bundle: " << report.bundle.to_string();
    if (!(report.computed_bundle == report.bundle)) os << "  (computed on " << report.computed_bundle.to_string() << ')';
    os << '\n';
    os << "cohomology (t, j): dimension\n";
    for (const auto& [key, terms] : report.cohomology.entries)
        os << "  (" << key.first << ", " << key.second
           << "): " << report.cohomology.dimension(key.first, key.second).str() << '\n';
    os << "betti:\n" << betti_grid(report.betti);
    if (report.hilbert) {
        os << "hilbert numerator: " << polynomial_text(report.hilbert->numerator) << '\n';
        os << "codim: " << codim << '\n';
        os << "multiplicity: " << report.hilbert->multiplicity.str() << '\n';
    } else {
        os << "codim: " << codim << '\n';
        os << "hilbert series: " << report.hilbert_error << '\n';
    }
    os << "regularity: " << report.regularity << '\n';
    os << "conjectured regularity: " << report.conjectured_regularity
       << (report.regularity == report.conjectured_regularity ? " (agree)" : " (COUNTEREXAMPLE)") << '\n';
    os << "checks:\n";
    for (const auto& c : report.checks.checks)
        os << "  " << std::left << std::setw(18) << c.id << (c.passed ? "ok    " : "FAILED") << "  " << c.detail
           << '\n';
    return os.str();
}

unsigned default_threads() {
    if (const char* env = std::getenv("SCHUBRES_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> sweep(std::pair<int, int> n_range, std::pair<int, int> m_range, unsigned threads,
                            bool normalize) {
    std::vector<SweepRow> rows;
    for (int n = n_range.first; n <= n_range.second; ++n)
        for (int m = m_range.first; m <= m_range.second; ++m)
            for (auto& w : enumerate_class_w(n, m)) rows.push_back(SweepRow{.w = std::move(w)});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
            SweepRow& row = rows[idx];
            try {
                const ResolutionReport report = resolve(row.w, normalize);
                row.r = report.r;
                row.regularity = report.regularity;
                row.conjectured = report.conjectured_regularity;
                row.validated = report.checks.all_passed();
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betti tables of opposite Schubert cells in Grassmannians", "schubres"};
    app.require_subcommand(1);
    Options opt;

    auto* resolve_cmd = app.add_subcommand("resolve", "minimal free resolution of one w in W_r");
    add_target_options(resolve_cmd, opt);
    add_output_options(resolve_cmd, opt);
    resolve_cmd->add_flag("--no-normalize", opt.no_normalize, "run the pipeline on the raw bundle");

    auto* sweep_cmd = app.add_subcommand("sweep", "regularity against the conjectured formula over a grid");
    sweep_cmd->add_option("--n", opt.n_range, "n or lo..hi")->required();
    sweep_cmd->add_option("--m", opt.m_range, "m or lo..hi")->required();
    add_output_options(sweep_cmd, opt);
    sweep_cmd->add_flag("--no-normalize", opt.no_normalize, "run the pipeline on the raw bundle");

    auto* smooth_cmd = app.add_subcommand("check-smooth", "smoothness of the partial-flag Schubert variety");
    add_target_options(smooth_cmd, opt);
    add_output_options(smooth_cmd, opt);
    smooth_cmd->add_option("--s", opt.s, "parabolic index, default min(r(w), n-1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (resolve_cmd->parsed()) return run_resolve(opt, out, err);
        if (sweep_cmd->parsed()) return run_sweep(opt, out, err);
        return run_check_smooth(opt, out, err);
    } catch (const MembershipError& e) {
        err << "error: " << e.what() << '\n';
        return kMembership;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kConsistency;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"schubres"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace schubres::cli
