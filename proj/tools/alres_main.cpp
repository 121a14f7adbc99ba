#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alres/json_io.hpp"

namespace {

using namespace alres;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::BoundarySurface:
    case ErrorCode::NearSingularEvaluation:
    case ErrorCode::SingularMatrix:
    case ErrorCode::SingularTransition:
    case ErrorCode::PoleAtOrigin:
        return kExitSingular;
    default:
        return kExitUsage;
    }
}

struct CommonOpts {
    std::string potential_path;
    std::string region_name;
    double abs_w = 0.0;
    double h = -1.0;
    bool has_abs_w = false;
    bool has_h = false;
    std::vector<int> window; // m_lo m_hi n_lo n_hi
    std::string eval_spec;   // "w_re,w_im[,lambda]"
    std::string out_path;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o)
{
    cmd->set_help_flag("--help", "print help"); // frees -h / --h for the weight
    cmd->add_option("--potential", o.potential_path, "potential JSON file {k, r, s}")
        ->required();
    cmd->add_option("--region", o.region_name,
                    "region tag: both-below | w-above | winv-above | both-above");
    cmd->add_option("--abs-w", o.abs_w, "numeric |w| for region selection")
        ->each([&o](const std::string&) { o.has_abs_w = true; });
    cmd->add_option("--h", o.h, "numeric extension weight h")
        ->each([&o](const std::string&) { o.has_h = true; });
    cmd->add_option("--window", o.window, "window bounds: m_lo m_hi n_lo n_hi")
        ->expected(4);
    cmd->add_option("--eval", o.eval_spec, "numeric point w_re,w_im[,lambda]");
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

RegionTag resolve_region(const CommonOpts& o, std::optional<RegionTag> fallback = {})
{
    std::optional<RegionTag> tag;
    if (!o.region_name.empty()) {
        tag = region_from_name(o.region_name);
        if (!tag)
            fail(ErrorCode::InvalidArgument, "unknown region tag '" + o.region_name + "'");
    }
    if (o.has_abs_w || o.has_h) {
        if (!(o.has_abs_w && o.has_h))
            fail(ErrorCode::InvalidArgument, "--abs-w and --h must be given together");
        const RegionTag num = region_classify(o.abs_w, o.h);
        if (tag && *tag != num)
            fail(ErrorCode::InvalidArgument,
                 std::string("region tag disagrees with the numeric point, which lies in ")
                     + region_name(num));
        return num;
    }
    if (tag)
        return *tag;
    if (fallback)
        return *fallback;
    fail(ErrorCode::InvalidArgument, "give either --region or --abs-w with --h");
}

WindowBounds resolve_window(const CommonOpts& o, const Potential& p)
{
    if (o.window.empty())
        return default_window(p);
    return WindowBounds{o.window[0], o.window[1], o.window[2], o.window[3]};
}

struct EvalPoint {
    std::complex<double> w0;
    std::complex<double> lambda0{0.0, 0.0};
};

std::optional<EvalPoint> parse_eval(const std::string& spec)
{
    if (spec.empty())
        return std::nullopt;
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        parts.push_back(std::stod(tok));
    if (parts.size() != 2 && parts.size() != 3)
        fail(ErrorCode::InvalidArgument, "--eval expects w_re,w_im[,lambda]");
    EvalPoint pt;
    pt.w0 = {parts[0], parts[1]};
    if (parts.size() == 3)
        pt.lambda0 = {parts[2], 0.0};
    return pt;
}

void emit(const CommonOpts& o, const std::string& text)
{
    if (o.out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(o.out_path);
    if (!out)
        fail(ErrorCode::InvalidArgument, "cannot open output file '" + o.out_path + "'");
    out << text << "\n";
}

json eval_matrix_json(const Mat2& m, const EvalPoint& pt)
{
    const auto v = m.eval(pt.w0, pt.lambda0);
    auto c = [](std::complex<double> z) { return json::array({z.real(), z.imag()}); };
    return json{{"lambda", c(pt.lambda0)},
                {"value", json::array({json::array({c(v[0]), c(v[1])}),
                                       json::array({c(v[2]), c(v[3])})})},
                {"w", c(pt.w0)}};
}

int cmd_describe(const CommonOpts& o)
{
    const Potential p = io::load_potential_file(o.potential_path);
    const Mat2 a = transition_matrix(p, false);
    if (o.format == "json") {
        json j = io::to_json(p);
        j["K"] = p.K();
        j["Q"] = p.Q();
        j["degenerate_sites"] = p.degenerate_sites();
        j["a"] = io::to_json(a);
        j["a_reg"] = io::to_json(transition_matrix(p, true));
        emit(o, j.dump(2));
        return kExitOk;
    }
    std::ostringstream os;
    os << "support: [" << p.k() << ", " << p.K() << "]\n";
    os << "r:";
    for (int n = p.k(); n <= p.K(); ++n)
        os << " " << p.r(n);
    os << "\ns:";
    for (int n = p.k(); n <= p.K(); ++n)
        os << " " << p.s(n);
    os << "\ndegenerate sites:";
    for (int n : p.degenerate_sites())
        os << " " << n;
    os << "\nQ: " << p.Q() << "\n";
    os << "a11: " << a.e11().str() << "\n";
    os << "a12: " << a.e12().str() << "\n";
    os << "a21: " << a.e21().str() << "\n";
    os << "a22: " << a.e22().str();
    emit(o, os.str());
    return kExitOk;
}

int cmd_entry(const CommonOpts& o, int m, int n, bool limit)
{
    const Potential p = io::load_potential_file(o.potential_path);
    const RegionTag region = resolve_region(o);
    const WindowBounds b{m, m, n, n};
    const KernelWindow w =
        limit ? limit_resolvent_window(p, region, b) : resolvent_window(p, region, b, true);
    json j{{"h_exp", KernelWindow::h_exponent(m, n)},
           {"m", m},
           {"matrix", io::to_json(w.at(m, n))},
           {"n", n},
           {"region", region_name(region)}};
    if (auto pt = parse_eval(o.eval_spec)) {
        json ev = eval_matrix_json(w.at(m, n), *pt);
        if (o.has_h)
            ev["h"] = o.h;
        j["eval"] = std::move(ev);
    }
    emit(o, j.dump(2));
    return kExitOk;
}

int cmd_expand(const CommonOpts& o)
{
    const Potential p = io::load_potential_file(o.potential_path);
    const RegionTag region = resolve_region(o, RegionTag::BothAbove);
    if (region != RegionTag::BothAbove)
        fail(ErrorCode::InvalidArgument,
             "the pole expansion lives in the both-above region");
    const WindowBounds b = resolve_window(o, p);
    if (b.m_lo > p.k() || b.m_hi < p.K() || b.n_lo > p.k() || b.n_hi < p.K())
        fail(ErrorCode::WindowTooSmall, "expansion window must cover the support");
    emit(o, io::to_json(lambda_expansion(p, b)).dump(2));
    return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& corrupt_spec)
{
    const Potential p = io::load_potential_file(o.potential_path);
    SuiteOptions opts;
    if (!o.window.empty())
        opts.window = resolve_window(o, p);
    if (!corrupt_spec.empty()) {
        std::stringstream ss(corrupt_spec);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            fail(ErrorCode::InvalidArgument, "--corrupt expects m,n");
        opts.corrupt = std::pair{std::stoi(a), std::stoi(b)};
    }
    const auto reports = run_all_suites(p, opts);
    emit(o, io::to_json(reports).dump(2));
    return all_pass(reports) ? kExitOk : kExitVerifyFail;
}

int cmd_sweep(const CommonOpts& o, const std::string& w_grid_spec,
              const std::string& h_grid_spec, const std::string& entries_spec,
              double lambda0)
{
    const Potential p = io::load_potential_file(o.potential_path);

    auto parse_grid = [](const std::string& spec, const char* what) {
        std::vector<double> g;
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            g.push_back(std::stod(tok));
        if (g.empty())
            fail(ErrorCode::InvalidArgument, std::string(what) + " grid is empty");
        return g;
    };
    const auto w_grid = parse_grid(w_grid_spec, "|w|");
    const auto h_grid = parse_grid(h_grid_spec, "h");

    std::vector<std::pair<int, int>> entries;
    {
        std::stringstream ss(entries_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos)
                fail(ErrorCode::InvalidArgument, "--entries expects m:n pairs");
            entries.emplace_back(std::stoi(tok.substr(0, colon)),
                                 std::stoi(tok.substr(colon + 1)));
        }
        if (entries.empty())
            entries = {{0, 0}, {1, 0}};
    }

    WindowBounds hull = default_window(p);
    for (const auto& [m, n] : entries) {
        hull.m_lo = std::min(hull.m_lo, m);
        hull.m_hi = std::max(hull.m_hi, m);
        hull.n_lo = std::min(hull.n_lo, n);
        hull.n_hi = std::max(hull.n_hi, n);
    }

    // one symbolic window per region, shared across all grid points
    const bool use_reg = lambda0 != 0.0;
    std::map<RegionTag, KernelWindow> windows;
    auto window_for = [&](RegionTag t) -> const KernelWindow& {
        auto it = windows.find(t);
        if (it == windows.end())
            it = windows
                     .emplace(t, use_reg ? resolvent_window(p, t, hull, true)
                                         : limit_resolvent_window(p, t, hull))
                     .first;
        return it->second;
    };

    std::ostringstream os;
    os << "abs_w,h,region";
    for (const auto& [m, n] : entries)
        os << ",mag_" << m << "_" << n;
    for (const auto& [m, n] : entries)
        os << ",jump_" << m << "_" << n;
    os << "\n";

    const std::complex<double> lc(lambda0, 0.0);
    for (double aw : w_grid) {
        bool have_prev = false;
        std::optional<RegionTag> prev_region;
        std::vector<std::array<std::complex<double>, 4>> prev_vals(entries.size());
        for (double h : h_grid) {
            os << aw << "," << h << ",";
            std::optional<RegionTag> region;
            std::string marker;
            if (aw <= 0.0) {
                marker = "error";
            } else {
                try {
                    region = region_classify(aw, h);
                } catch (const Error&) {
                    marker = "boundary";
                }
            }
            if (!region) {
                os << marker;
                for (std::size_t i = 0; i < 2 * entries.size(); ++i)
                    os << ",";
                os << "\n";
                have_prev = false;
                continue;
            }
            os << region_name(*region);
            const KernelWindow& w = window_for(*region);
            std::vector<std::array<std::complex<double>, 4>> vals(entries.size());
            bool row_ok = true;
            for (std::size_t i = 0; i < entries.size() && row_ok; ++i) {
                try {
                    vals[i] = w.at(entries[i].first, entries[i].second)
                                  .eval({aw, 0.0}, lc);
                } catch (const Error&) {
                    row_ok = false;
                }
            }
            if (!row_ok) {
                for (std::size_t i = 0; i < 2 * entries.size(); ++i)
                    os << ",";
                os << "\n";
                have_prev = false;
                continue;
            }
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const auto [m, n] = entries[i];
                double mag = 0.0;
                for (const auto& z : vals[i])
                    mag = std::max(mag, std::abs(z));
                mag *= std::pow(h, n - m);
                os << "," << mag;
            }
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (!have_prev) {
                    os << ",";
                    continue;
                }
                double jump = 0.0;
                if (prev_region != region)
                    for (int c = 0; c < 4; ++c)
                        jump = std::max(jump,
                                        std::abs(vals[i][static_cast<std::size_t>(c)]
                                                 - prev_vals[i][static_cast<std::size_t>(c)]));
                os << "," << jump;
            }
            os << "\n";
            have_prev = true;
            prev_region = region;
            prev_vals = vals;
        }
    }
    std::string text = os.str();
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    emit(o, text);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact extended-resolvent kernels of the Ablowitz-Ladik operator "
                 "with binary potential"};
    app.require_subcommand(1);

    CommonOpts o;
    int entry_m = 0, entry_n = 0;
    bool entry_limit = false;
    std::string corrupt_spec, w_grid_spec, h_grid_spec;
    std::string entries_spec = "0:0,1:0";
    double sweep_lambda = 0.0;

    CLI::App* describe = app.add_subcommand("describe", "potential summary and transition matrix");
    add_common(describe, o);

    CLI::App* entry = app.add_subcommand("entry", "one exact kernel entry");
    add_common(entry, o);
    entry->add_option("--m", entry_m, "row index")->required();
    entry->add_option("--n", entry_n, "column index")->required();
    entry->add_flag("--limit", entry_limit, "kernel of the unregularized operator");

    CLI::App* expand = app.add_subcommand("expand", "pole expansion in the both-above region");
    add_common(expand, o);

    CLI::App* verify = app.add_subcommand("verify", "run every identity suite");
    add_common(verify, o);
    verify->add_option("--corrupt", corrupt_spec,
                       "debug: corrupt kernel entry m,n before checking");

    CLI::App* sweep = app.add_subcommand("sweep", "numeric sweep of the (|w|, h) plane");
    add_common(sweep, o);
    sweep->add_option("--w-grid", w_grid_spec, "comma-separated |w| values")->required();
    sweep->add_option("--h-grid", h_grid_spec, "comma-separated h values")->required();
    sweep->add_option("--entries", entries_spec, "kernel entries to evaluate, m:n pairs");
    sweep->add_option("--lambda", sweep_lambda, "regularization value for the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (describe->parsed())
            return cmd_describe(o);
        if (entry->parsed())
            return cmd_entry(o, entry_m, entry_n, entry_limit);
        if (expand->parsed())
            return cmd_expand(o);
        if (verify->parsed())
            return cmd_verify(o, corrupt_spec);
        if (sweep->parsed())
            return cmd_sweep(o, w_grid_spec, h_grid_spec, entries_spec, sweep_lambda);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
