// gordon: command-line front end for the identity checks, partition and path
// tables, and Bailey-chain traces.

#include <gordon/bailey.hpp>
#include <gordon/identities.hpp>
#include <gordon/lattice_path.hpp>
#include <gordon/partitions.hpp>
#include <gordon/wire.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace gordon;
using json = nlohmann::json;

namespace
{

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Output {
    std::string path;

    void write(const std::string &text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) {
            throw precondition_error("cannot write " + path);
        }
        out << text;
    }
};

std::string json_text(const json &j) { return j.dump(2) + "\n"; }

// ag | w | wbar | main | paths, with w/wbar resolved to the parity case.
identities::Theorem resolve_theorem(const std::string &name, const GordonParams &gp)
{
    using identities::Theorem;
    if (name == "ag") {
        return Theorem::AG;
    }
    if (name == "main") {
        return Theorem::Main;
    }
    if (name == "paths") {
        return Theorem::Paths;
    }
    if (name == "w") {
        return identities::w_case(gp);
    }
    if (name == "wbar") {
        if (auto t = identities::wbar_case(gp)) {
            return *t;
        }
        throw precondition_error("no Wbar identity for k=" + std::to_string(gp.k) + " a=" + std::to_string(gp.a) +
                                 " (needs k and a of opposite parity)");
    }
    return identities::theorem_from_string(name);
}

std::string summary_line(const identities::VerificationReport &r)
{
    std::ostringstream os;
    os << (r.equal ? "PASS " : "FAIL ") << identities::to_string(r.spec.theorem) << " k=" << r.spec.gp.k
       << " a=" << r.spec.gp.a << " order=" << r.spec.order;
    if (r.first_discrepancy) {
        const auto &d = *r.first_discrepancy;
        os << ": first discrepancy at q^" << to_string(d.exponent) << " lhs=" << d.lhs.get_str()
           << " rhs=" << d.rhs.get_str();
    }
    return os.str();
}

struct Range {
    int lo = 0;
    int hi = -1;
};

Range parse_range(const std::string &text)
{
    Range r;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, colon));
            r.hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception &) {
        throw precondition_error("bad range '" + text + "' (expected N or LO:HI)");
    }
    return r;
}

unsigned default_jobs()
{
    if (const char *env = std::getenv("GORDON_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Cell {
    std::string theorem;
    int k = 0;
    int a = 0;
    int order = 0;
    std::string status;
    std::string detail;
};

int run_sweep(const std::vector<std::string> &theorems, Range ks, Range as, int order, unsigned jobs, bool as_json,
              const Output &out)
{
    std::vector<Cell> cells;
    for (const auto &t : theorems) {
        for (int k = ks.lo; k <= ks.hi; ++k) {
            for (int a = as.lo; a <= as.hi; ++a) {
                cells.push_back({t, k, a, order, "", ""});
            }
        }
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            Cell &c = cells[i];
            const GordonParams gp{c.k, c.a};
            try {
                const auto spec = identities::IdentitySpec{resolve_theorem(c.theorem, gp), gp, c.order};
                spec.validate();
                const auto r = identities::verify(spec);
                c.status = r.equal ? "pass" : "fail";
                c.detail = summary_line(r);
            } catch (const precondition_error &e) {
                c.status = "skipped-invalid";
                c.detail = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back(worker);
    }
    for (auto &th : pool) {
        th.join();
    }

    bool any_fail = false;
    std::ostringstream text;
    json arr = json::array();
    for (const auto &c : cells) {
        any_fail = any_fail || c.status == "fail";
        arr.push_back({{"theorem", c.theorem}, {"k", c.k}, {"a", c.a}, {"order", c.order}, {"status", c.status},
                       {"detail", c.detail}});
        text << c.theorem << "\t" << c.k << "\t" << c.a << "\t" << c.order << "\t" << c.status << "\n";
    }
    out.write(as_json ? json_text(arr) : text.str());
    return any_fail ? exit_fail : exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Rogers-Ramanujan-Gordon identity checks"};
    app.require_subcommand(1);
    Output out;
    app.add_option("-o,--output", out.path, "Write the result to this file");

    int k = 0;
    int a = 0;
    int order = -1;
    bool as_json = false;

    auto *verify = app.add_subcommand("verify", "Compare both sides of an identity to a given order");
    std::string theorem;
    verify->add_option("--theorem", theorem, "ag, w, wbar, main or paths")
        ->required()
        ->check(CLI::IsMember({"ag", "w", "wbar", "main", "paths"}));
    verify->add_option("--k", k)->required();
    verify->add_option("--a", a)->required();
    verify->add_option("--order", order, "Default 40, or 20 for paths")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", as_json);

    auto *count = app.add_subcommand("count", "Partition counts for n = 0..N as a JSON array");
    std::string family;
    int n_max = 0;
    count->add_option("--family", family, "A, B, W or Wbar")->required();
    count->add_option("--k", k)->required();
    count->add_option("--a", a)->required();
    count->add_option("--n", n_max)->required()->check(CLI::NonNegativeNumber);

    auto *enumerate = app.add_subcommand("enumerate-paths", "List admissible lattice paths");
    std::string svg_dir;
    enumerate->add_option("--k", k)->required();
    enumerate->add_option("--a", a)->required();
    enumerate->add_option("--n", n_max, "Largest major index")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--svg", svg_dir, "Also write one SVG per path into this directory");
    enumerate->add_flag("--json", as_json);

    auto *chain = app.add_subcommand("bailey-chain", "Build and check the Bailey chain for (k, a)");
    bool trace = false;
    chain->add_option("--k", k)->required();
    chain->add_option("--a", a)->required();
    chain->add_option("--nmax", n_max)->required()->check(CLI::NonNegativeNumber);
    chain->add_option("--order", order)->required()->check(CLI::PositiveNumber);
    chain->add_flag("--trace", trace, "Emit every intermediate pair");

    auto *sweep = app.add_subcommand("sweep", "Run verify over a grid of (k, a)");
    std::vector<std::string> sweep_theorems{"ag", "w", "wbar", "main"};
    std::string k_range = "2:6";
    std::string a_range = "1:6";
    unsigned jobs = default_jobs();
    sweep->add_option("--theorem", sweep_theorems, "Theorems to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"ag", "w", "wbar", "main", "paths"}));
    sweep->add_option("--k", k_range, "N or LO:HI")->capture_default_str();
    sweep->add_option("--a", a_range, "N or LO:HI")->capture_default_str();
    sweep->add_option("--order", order, "Default 40")->check(CLI::NonNegativeNumber);
    sweep->add_option("-j,--jobs", jobs, "Worker threads (default $GORDON_JOBS or the core count)")
        ->check(CLI::PositiveNumber);
    sweep->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const GordonParams gp{k, a};
        if (verify->parsed()) {
            const auto t = resolve_theorem(theorem, gp);
            const int ord = order >= 0 ? order : (t == identities::Theorem::Paths ? 20 : 40);
            const auto report = identities::verify({t, gp, ord});
            out.write(as_json ? json_text(wire::to_json(report)) : summary_line(report) + "\n");
            return report.equal ? exit_pass : exit_fail;
        }
        if (count->parsed()) {
            const auto table = partitions::count_table(partitions::family_from_string(family), gp, n_max);
            out.write(json(table).dump() + "\n");
            return exit_pass;
        }
        if (enumerate->parsed()) {
            gp.validate();
            if (!svg_dir.empty()) {
                std::filesystem::create_directories(svg_dir);
            }
            json arr = json::array();
            std::ostringstream text;
            int index = 0;
            paths::for_each_admissible_path(gp, n_max, [&](const paths::LatticePath &p) {
                arr.push_back(wire::to_json(p));
                text << paths::major_index(p) << "\t" << p.compact() << "\n";
                if (!svg_dir.empty()) {
                    std::ofstream svg(std::filesystem::path(svg_dir) / ("path_" + std::to_string(index) + ".svg"));
                    svg << paths::render_svg(p);
                }
                ++index;
            });
            out.write(as_json ? json_text(arr) : text.str());
            return exit_pass;
        }
        if (chain->parsed()) {
            const auto stages = bailey::chain_stages(gp, n_max, order);
            bool ok = true;
            json arr = json::array();
            for (const auto &s : stages) {
                ok = ok && s.check.ok;
                json j{{"transform", s.transform ? bailey::to_string(*s.transform) : "unit"},
                       {"check", s.check.ok}};
                if (s.transform == bailey::Transform::P41) {
                    j["A"] = wire::rational_to_json(s.A);
                }
                if (s.check.first_bad_n) {
                    j["first_bad_n"] = *s.check.first_bad_n;
                }
                if (trace) {
                    j["pair"] = wire::to_json(s.pair);
                }
                arr.push_back(std::move(j));
            }
            json result{{"k", k}, {"a", a}, {"ok", ok}, {"stages", arr}};
            if (!trace) {
                result["pair"] = wire::to_json(stages.back().pair);
            }
            out.write(json_text(result));
            return ok ? exit_pass : exit_fail;
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_theorems, parse_range(k_range), parse_range(a_range), order >= 0 ? order : 40,
                             jobs, as_json, out);
        }
    } catch (const precondition_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
