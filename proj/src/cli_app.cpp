#include "curvecount/cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "curvecount/cache.hpp"
#include "curvecount/gw.hpp"
#include "curvecount/igusa.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/partitions.hpp"
#include "curvecount/serialize.hpp"
#include "curvecount/wallcross.hpp"

namespace curvecount {

namespace {

struct GlobalOpts {
    std::string format = "text"; // text | json | csv
    std::string out_file;
    std::string cache_dir;
    int threads = 1;
};

struct Report {
    std::string command;
    Json config = Json::object();
    Json records = Json::array();
    std::vector<std::string> lines; // text rendering, one per record
    std::string csv;                // csv rendering when applicable
    bool pass = true;
    long long elapsed_ms = 0;
};

Json report_to_json(const Report& r) {
    return Json{{"command", r.command},
                {"config", r.config},
                {"records", r.records},
                {"pass", r.pass},
                {"elapsed_ms", r.elapsed_ms}};
}

void emit(const Report& r, const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    std::ostringstream body;
    if (g.format == "json") {
        body << report_to_json(r).dump(2) << "\n";
    } else if (g.format == "csv" && !r.csv.empty()) {
        body << r.csv;
    } else {
        body << "# " << r.command << "\n";
        if (!r.csv.empty() && r.lines.empty()) {
            body << r.csv;
        } else {
            for (const std::string& line : r.lines) body << line << "\n";
        }
        body << (r.pass ? "PASS" : "FAIL") << " (" << r.records.size() << " records, "
             << r.elapsed_ms << " ms)\n";
    }
    if (!g.out_file.empty()) {
        std::ofstream f(g.out_file);
        if (!f) {
            err << "cannot write " << g.out_file << "\n";
            return;
        }
        f << body.str();
    }
    out << body.str();
}

/// Splits indices 0..count-1 over at most `threads` workers; results must be
/// written to disjoint slots by the callback.
void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(std::min<long>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (long i = w; i < count; i += workers) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

Json record_json(const InvariantRecord& rec) {
    return Json{{"variant", rec.variant},
                {"class", rec.klass},
                {"value", rec.value.to_string()},
                {"route", route_name(rec.route)}};
}

MTable cached_igusa_table(const IgusaConfig& cfg, const TableCache& cache, std::ostream& err) {
    std::ostringstream key;
    key << "m3|hmax=" << cfg.h_max << "|dmax=" << cfg.d_max << "|nmin=" << cfg.n_min
        << "|nmax=" << cfg.n_max;
    if (auto hit = cache.load(key.str(), &err)) {
        try {
            MTable t = m_table_from_json(*hit);
            if (t.h_max() == cfg.h_max && t.d_max() == cfg.d_max && t.n_min() == cfg.n_min &&
                t.n_max() == cfg.n_max)
                return t;
            err << "cache entry has stale bounds, recomputing\n";
        } catch (const std::exception& e) {
            err << "cache entry unreadable (" << e.what() << "), recomputing\n";
        }
    }
    QuadraticCoeffTable c = c_table(4L * cfg.h_max * cfg.d_max);
    MTable t = igusa_m_table(cfg, c);
    cache.store(key.str(), table_to_json(t));
    return t;
}

// ---------------------------------------------------------------- commands

int cmd_tables(const std::string& which, const IgusaConfig& cfg, long bound, int kgrid,
               int ad_max, const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "tables " + which;
    TableCache cache = TableCache::from_env(g.cache_dir);
    if (which == "m") {
        r.config = {{"hmax", cfg.h_max}, {"dmax", cfg.d_max}, {"nmin", cfg.n_min},
                    {"nmax", cfg.n_max}};
        MTable t = cached_igusa_table(cfg, cache, err);
        r.records.push_back(table_to_json(t));
        r.csv = table_to_csv(t);
    } else if (which == "c" || which == "a") {
        r.config = {{"bound", bound}, {"kgrid", kgrid}};
        QuadraticCoeffTable t = which == "c" ? c_table(bound, kgrid) : a_table(bound, kgrid);
        r.records.push_back(table_to_json(t));
        r.csv = table_to_csv(t);
    } else if (which == "ad") {
        r.config = {{"dmax", ad_max}};
        EulerTable t = euler_hilb_k3(ad_max);
        r.records.push_back(table_to_json(t));
        r.csv = table_to_csv(t);
    } else if (which == "m2") {
        r.config = {{"dmax", cfg.d_max}, {"nmin", cfg.n_min}, {"nmax", cfg.n_max}};
        MRowTable t = m_direct(cfg.d_max, cfg.n_min, cfg.n_max);
        r.records.push_back(table_to_json(t));
        r.csv = table_to_csv(t);
    } else {
        err << "unknown table '" << which << "'\n";
        return 2;
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return 0;
}

int cmd_dt_k3xe(long n, int d, bool have_beta, long beta_sq, long beta_div,
                const std::string& route_str, const GlobalOpts& g, std::ostream& out,
                std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "dt k3xe";
    r.config = {{"n", n}, {"d", d}};
    InvariantRecord rec;
    rec.variant = "k3xe";
    rec.klass = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};

    if (have_beta) {
        rec.klass["beta_sq"] = std::to_string(beta_sq);
        rec.klass["beta_div"] = std::to_string(beta_div);
        r.config["beta_sq"] = beta_sq;
        r.config["beta_div"] = beta_div;
        if (!route_str.empty() && route_str != "multiple_cover") {
            err << "classes with nonzero beta support only the multiple_cover route\n";
            return 2;
        }
        rec.route = Route::multiple_cover;
        K3xEClass cls{n, false, beta_sq, beta_div, d};
        cls.validate();
        int h_need = static_cast<int>(beta_sq / 2 + 1);
        IgusaConfig cfg{std::max(h_need, 1), d, -std::labs(n), std::labs(n)};
        TableCache cache = TableCache::from_env(g.cache_dir);
        MTable mt = cached_igusa_table(cfg, cache, err);
        rec.value = mc_k3xe(cls, mt);
    } else {
        rec.klass["beta"] = "0";
        Route route = route_str.empty() ? Route::closed_formula : route_from_name(route_str);
        rec.route = route;
        switch (route) {
            case Route::closed_formula:
            case Route::product_log: {
                MRowTable m = m_direct(d, -std::labs(n), std::labs(n));
                rec.value = dt_k3xe_0d(n, d, route, m);
                break;
            }
            case Route::multiple_cover: {
                IgusaConfig cfg{1, d, -std::labs(n), std::labs(n)};
                TableCache cache = TableCache::from_env(g.cache_dir);
                MTable mt = cached_igusa_table(cfg, cache, err);
                rec.value = mc_k3xe(K3xEClass{n, true, 0, 1, d}, mt);
                break;
            }
            case Route::wall_crossing: {
                auto dt = dual_assemble(k3xe_wallcross_input(n, d));
                rec.value = dt.at({n, d});
                break;
            }
        }
    }
    r.records.push_back(record_json(rec));
    r.lines.push_back(record_json(rec).dump());
    r.lines.push_back("value = " + rec.value.to_string() + " (" + route_name(rec.route) + ")");
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return 0;
}

int cmd_dt_abelian(long n, const std::vector<long>& type, const std::string& route_str,
                   const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    if (type.size() != 3) {
        err << "--type needs exactly three comma-separated entries\n";
        return 2;
    }
    Report r;
    r.command = "dt abelian";
    r.config = {{"n", n}, {"type", type}};
    AbelianClass cls{n, type[0], type[1], type[2]};
    cls.validate();

    InvariantRecord rec;
    rec.variant = "abelian";
    rec.klass = {{"n", std::to_string(n)},
                 {"type", std::to_string(type[0]) + "," + std::to_string(type[1]) + "," +
                              std::to_string(type[2])}};
    Route route = route_str.empty()
                      ? (cls.is_degenerate_type() ? Route::closed_formula : Route::multiple_cover)
                      : route_from_name(route_str);
    rec.route = route;
    switch (route) {
        case Route::closed_formula:
            rec.value = dt_abelian_closed(n, cls.degenerate_d());
            break;
        case Route::multiple_cover: {
            long D = type[0] * type[1] * type[2];
            QuadraticCoeffTable a = a_table(std::max(4 * D, 4L));
            rec.value = dt_abelian_mc(cls, a);
            break;
        }
        case Route::wall_crossing: {
            long d = cls.degenerate_d();
            auto dt = bidual_assemble(abelian_wallcross_input(n, static_cast<int>(d)));
            rec.value = dt.at({n, static_cast<int>(d)}).c11();
            break;
        }
        default:
            err << "route " << route_str << " not available for abelian classes\n";
            return 2;
    }
    r.records.push_back(record_json(rec));
    r.lines.push_back(record_json(rec).dump());
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return 0;
}

int cmd_verify_thm1(long n_max, int d_max, bool show_gcd, const GlobalOpts& g,
                    std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "verify thm1";
    r.config = {{"nmax", n_max}, {"dmax", d_max}};
    MRowTable m = m_direct(d_max, -n_max, n_max);
    auto wc = dual_assemble(k3xe_wallcross_input(n_max, d_max));

    std::vector<Json> rows(static_cast<std::size_t>(n_max) * (d_max + 1));
    std::vector<char> ok(rows.size(), 0);
    parallel_for(static_cast<long>(rows.size()), g.threads, [&](long idx) {
        long n = idx / (d_max + 1) + 1;
        int d = static_cast<int>(idx % (d_max + 1));
        Rational closed = dt_k3xe_0d(n, d, Route::closed_formula, m);
        Rational prod = dt_k3xe_0d(n, d, Route::product_log, m);
        Rational wall = wc.at({n, d});
        bool agree = closed == prod && prod == wall;
        Json row{{"n", n},
                 {"d", d},
                 {"closed_formula", closed.to_string()},
                 {"product_log", prod.to_string()},
                 {"wall_crossing", wall.to_string()},
                 {"agree", agree}};
        if (show_gcd) {
            Rational variant = dt_k3xe_0d_gcd_variant(n, d, m);
            row["gcd_variant"] = variant.to_string();
            row["gcd_variant_matches"] = variant == closed;
        }
        rows[idx] = std::move(row);
        ok[idx] = agree ? 1 : 0;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows[i];
        std::ostringstream line;
        line << "n=" << row.at("n").get<long>() << " d=" << row.at("d").get<int>()
             << " closed=" << row.at("closed_formula").get<std::string>()
             << " product_log=" << row.at("product_log").get<std::string>()
             << " wall=" << row.at("wall_crossing").get<std::string>()
             << (ok[i] ? " agree" : " DISAGREE");
        if (show_gcd)
            line << " gcd_variant=" << row.at("gcd_variant").get<std::string>()
                 << (row.at("gcd_variant_matches").get<bool>() ? " (same)" : " (differs)");
        r.records.push_back(row);
        r.lines.push_back(line.str());
        r.pass = r.pass && ok[i];
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return r.pass ? 0 : 1;
}

int cmd_verify_thm2(long n_max, int d_max, const GlobalOpts& g, std::ostream& out,
                    std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "verify thm2";
    r.config = {{"nmax", n_max}, {"dmax", d_max}};
    QuadraticCoeffTable a = a_table(4);
    auto wc = bidual_assemble(abelian_wallcross_input(n_max, d_max));

    std::vector<Json> rows(static_cast<std::size_t>(n_max) * (d_max + 1));
    std::vector<char> ok(rows.size(), 0);
    parallel_for(static_cast<long>(rows.size()), g.threads, [&](long idx) {
        long n = idx / (d_max + 1) + 1;
        int d = static_cast<int>(idx % (d_max + 1));
        Rational closed = dt_abelian_closed(n, d);
        Rational cover = dt_abelian_mc(AbelianClass{n, 0, 0, d}, a);
        Rational wall = wc.at({n, d}).c11();
        bool agree = closed == cover && cover == wall;
        rows[idx] = Json{{"n", n},
                         {"d", d},
                         {"closed_formula", closed.to_string()},
                         {"multiple_cover", cover.to_string()},
                         {"wall_crossing", wall.to_string()},
                         {"agree", agree}};
        ok[idx] = agree ? 1 : 0;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows[i];
        std::ostringstream line;
        line << "n=" << row.at("n").get<long>() << " d=" << row.at("d").get<int>()
             << " closed=" << row.at("closed_formula").get<std::string>()
             << " cover=" << row.at("multiple_cover").get<std::string>()
             << " wall=" << row.at("wall_crossing").get<std::string>()
             << (ok[i] ? " agree" : " DISAGREE");
        r.records.push_back(row);
        r.lines.push_back(line.str());
        r.pass = r.pass && ok[i];
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return r.pass ? 0 : 1;
}

int cmd_verify_thm3(long n_max, int d_max, const GlobalOpts& g, std::ostream& out,
                    std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "verify thm3";
    r.config = {{"nmax", n_max}, {"dmax", d_max}};
    MRowTable m = m_direct(d_max, -n_max, n_max);
    EulerTable a = euler_hilb_k3(d_max);
    DtPtReport rep = dtpt_verify_k3xe(d_max, static_cast<int>(n_max), m, a);
    for (const DtPtRow& row : rep.rows) {
        Json j{{"d", row.d}, {"series_identity", row.pass}};
        r.records.push_back(j);
        r.lines.push_back("d=" + std::to_string(row.d) + " series identity to q^" +
                          std::to_string(n_max) + (row.pass ? " holds" : " FAILS"));
    }
    bool pt0 = true;
    for (long n = 1; n <= n_max; ++n) pt0 = pt0 && pt_k3xe_0d(n, 0, m, a) == Rational(0);
    Json j{{"corollary", "pt_degree0_vanishes"}, {"holds", pt0}};
    r.records.push_back(j);
    r.lines.push_back(std::string("corollary: degree-0 stable-pairs invariants vanish: ") +
                      (pt0 ? "holds" : "FAILS"));
    r.pass = rep.pass && pt0;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return r.pass ? 0 : 1;
}

int cmd_wallcross(const std::string& variant, long n_max, int d_max, const GlobalOpts& g,
                  std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "wallcross " + variant;
    r.config = {{"nmax", n_max}, {"dmax", d_max}};
    if (variant == "k3xe") {
        MRowTable m = m_direct(d_max, -n_max, n_max);
        auto dt = dual_assemble(k3xe_wallcross_input(n_max, d_max));
        for (long n = 1; n <= n_max; ++n)
            for (int d = 0; d <= d_max; ++d) {
                Rational closed = dt_k3xe_0d(n, d, Route::closed_formula, m);
                bool agree = dt.at({n, d}) == closed;
                Json j{{"n", n},
                       {"d", d},
                       {"wall_crossing", dt.at({n, d}).to_string()},
                       {"closed_formula", closed.to_string()},
                       {"agree", agree}};
                r.records.push_back(j);
                r.lines.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                  " wall=" + dt.at({n, d}).to_string() +
                                  " closed=" + closed.to_string() +
                                  (agree ? " agree" : " DISAGREE"));
                r.pass = r.pass && agree;
            }
    } else if (variant == "abelian") {
        auto dt = bidual_assemble(abelian_wallcross_input(n_max, d_max));
        for (long n = 1; n <= n_max; ++n)
            for (int d = 0; d <= d_max; ++d) {
                Rational closed = dt_abelian_closed(n, d);
                bool agree = dt.at({n, d}).c11() == closed;
                Json j{{"n", n},
                       {"d", d},
                       {"wall_crossing", dt.at({n, d}).c11().to_string()},
                       {"closed_formula", closed.to_string()},
                       {"agree", agree}};
                r.records.push_back(j);
                r.lines.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                  " wall=" + dt.at({n, d}).c11().to_string() +
                                  " closed=" + closed.to_string() +
                                  (agree ? " agree" : " DISAGREE"));
                r.pass = r.pass && agree;
            }
    } else {
        err << "unknown wallcross variant '" << variant << "'\n";
        return 2;
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return r.pass ? 0 : 1;
}

int cmd_partitions(int dim, int n_max, const GlobalOpts& g, std::ostream& out,
                   std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "partitions";
    r.config = {{"dim", dim}, {"nmax", n_max}};
    std::ostringstream csv;
    csv << "n,value\n";
    for (int n = 0; n <= n_max; ++n) {
        unsigned long v = count_partitions(dim, n);
        csv << n << "," << Rational(Integer(v)).to_string() << "\n";
        r.records.push_back(Json{{"n", n}, {"value", Rational(Integer(v)).to_string()}});
    }
    r.csv = csv.str();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return 0;
}

int cmd_kummer(int dim, long euler, int n_max, const GlobalOpts& g, std::ostream& out,
               std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "kummer";
    r.config = {{"dim", dim}, {"euler", euler}, {"nmax", n_max}};
    auto series = kummer_series(dim, euler, n_max);
    std::ostringstream csv;
    csv << "n,value\n";
    for (int n = 1; n <= n_max; ++n) {
        Rational eps = series.coeff({{Var::q, n}}).eps();
        csv << n << "," << eps.to_string() << "\n";
        r.records.push_back(Json{{"n", n}, {"value", eps.to_string()}});
    }
    r.csv = csv.str();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return 0;
}

int cmd_gw_check(unsigned g_max, int d_max, const GlobalOpts& g, std::ostream& out,
                 std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.command = "gw-check";
    r.config = {{"gmax", g_max}, {"dmax", d_max}};
    MRowTable m = m_direct(d_max, -d_max, std::max(2 * d_max, 4));
    EulerTable a = euler_hilb_k3(d_max);
    CorrespondenceReport rep = correspondence_check(g_max, d_max, m, a);
    for (const CorrespondenceRow& row : rep.rows) {
        Json j{{"g", row.g},
               {"d", row.d},
               {"gw", row.gw.to_string()},
               {"dt", row.dt.to_string()},
               {"equal", row.equal}};
        r.records.push_back(j);
        std::ostringstream line;
        line << "g=" << row.g << " d=" << row.d << " gw=" << row.gw.to_string()
             << " dt=" << row.dt.to_string() << (row.equal ? " equal" : " DIFFER");
        r.lines.push_back(line.str());
    }
    r.pass = rep.pass;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit(r, g, out, err);
    return r.pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact curve-count series calculator"};
    app.require_subcommand(1);
    app.fallthrough(); // global options are accepted after the subcommand
    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", g.out_file, "also write the report to this file");
    app.add_option("--cache-dir", g.cache_dir,
                   "table cache directory (or set CURVECOUNT_CACHE)");
    app.add_option("--threads", g.threads, "worker threads for grid verification")
        ->check(CLI::PositiveNumber);

    // igusa / tables
    IgusaConfig cfg;
    long bound = 40;
    int kgrid = 6, ad_max = 10;
    bool nmin_set = false;

    CLI::App* igusa = app.add_subcommand("igusa", "three-variable master coefficient table");
    igusa->add_option("--hmax", cfg.h_max)->required();
    igusa->add_option("--dmax", cfg.d_max)->required();
    igusa->add_option("--nmax", cfg.n_max)->required();
    igusa->add_option("--nmin", cfg.n_min)->each([&](const std::string&) { nmin_set = true; });

    CLI::App* tables = app.add_subcommand("tables", "coefficient table export");
    std::string which;
    tables->add_option("table", which, "one of: m, m2, c, a, ad")->required();
    tables->add_option("--hmax", cfg.h_max);
    tables->add_option("--dmax", cfg.d_max);
    tables->add_option("--nmax", cfg.n_max);
    tables->add_option("--nmin", cfg.n_min)->each([&](const std::string&) { nmin_set = true; });
    tables->add_option("--bound", bound);
    tables->add_option("--kgrid", kgrid);
    tables->add_option("--admax", ad_max);

    // dt
    CLI::App* dt = app.add_subcommand("dt", "single reduced invariant");
    CLI::App* dtk = dt->add_subcommand("k3xe");
    long n = 1;
    int d = 0;
    long beta_sq = 0, beta_div = 1;
    std::string route_str;
    dtk->add_option("--n", n)->required();
    dtk->add_option("--d", d)->required();
    CLI::Option* bsq = dtk->add_option("--beta-sq", beta_sq);
    dtk->add_option("--beta-div", beta_div);
    dtk->add_option("--route", route_str);
    CLI::App* dta = dt->add_subcommand("abelian");
    std::vector<long> type;
    dta->add_option("--n", n)->required();
    dta->add_option("--type", type)->required()->delimiter(',');
    dta->add_option("--route", route_str);
    dt->require_subcommand(1);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "multi-route identity checks");
    long n_max = 8;
    int d_max = 4;
    bool show_gcd = false;
    CLI::App* thm1 = verify->add_subcommand("thm1", "fiber-class triple agreement");
    thm1->add_option("--nmax", n_max);
    thm1->add_option("--dmax", d_max);
    thm1->add_flag("--show-gcd-variant", show_gcd);
    CLI::App* thm2 = verify->add_subcommand("thm2", "abelian triple agreement");
    thm2->add_option("--nmax", n_max);
    thm2->add_option("--dmax", d_max);
    CLI::App* thm3 = verify->add_subcommand("thm3", "DT/PT series identity");
    thm3->add_option("--nmax", n_max);
    thm3->add_option("--dmax", d_max);
    verify->require_subcommand(1);

    // wallcross
    CLI::App* wallcross = app.add_subcommand("wallcross", "wall-crossing assembly report");
    std::string wc_variant;
    wallcross->add_option("variant", wc_variant, "k3xe | abelian")->required();
    wallcross->add_option("--nmax", n_max);
    wallcross->add_option("--dmax", d_max);

    // partitions / kummer
    CLI::App* parts = app.add_subcommand("partitions", "d-dimensional partition counts");
    int dim = 3, pn_max = 8;
    parts->add_option("--dim", dim)->required();
    parts->add_option("--nmax", pn_max)->required();
    CLI::App* kummer = app.add_subcommand("kummer", "translation-quotient Euler numbers");
    long euler = 1;
    kummer->add_option("--dim", dim)->required();
    kummer->add_option("--euler", euler)->required();
    kummer->add_option("--nmax", pn_max)->required();

    // gw-check
    CLI::App* gwc = app.add_subcommand("gw-check", "asymptotic correspondence grid");
    unsigned g_max = 6;
    int gw_d_max = 3;
    gwc->add_option("--gmax", g_max);
    gwc->add_option("--dmax", gw_d_max);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        int code = app.exit(e, usage, usage);
        (code == 0 ? out : err) << usage.str();
        return code;
    }

    try {
        if (*igusa || *tables) {
            if (!nmin_set) cfg.n_min = -std::labs(cfg.n_max);
            std::string table = *igusa ? "m" : which;
            return cmd_tables(table, cfg, bound, kgrid, ad_max, g, out, err);
        }
        if (*dtk) return cmd_dt_k3xe(n, d, bsq->count() > 0, beta_sq, beta_div, route_str, g,
                                     out, err);
        if (*dta) return cmd_dt_abelian(n, type, route_str, g, out, err);
        if (*thm1) return cmd_verify_thm1(n_max, d_max, show_gcd, g, out, err);
        if (*thm2) return cmd_verify_thm2(n_max, d_max, g, out, err);
        if (*thm3) return cmd_verify_thm3(n_max, d_max, g, out, err);
        if (*wallcross) return cmd_wallcross(wc_variant, n_max, d_max, g, out, err);
        if (*parts) return cmd_partitions(dim, pn_max, g, out, err);
        if (*kummer) return cmd_kummer(dim, euler, pn_max, g, out, err);
        if (*gwc) return cmd_gw_check(g_max, gw_d_max, g, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace curvecount
