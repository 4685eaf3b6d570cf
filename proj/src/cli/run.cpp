#include "biorder/cli.hpp"
#include "biorder/selftest.hpp"
#include "biorder/special_functions.hpp"
#include "biorder/transforms.hpp"

#include "json.hpp"

#include <fstream>
#include <ostream>

namespace biorder::cli {

namespace {

using Json = nlohmann::ordered_json;

const char* name_of(Scheme s) { return s == Scheme::corrected ? "corrected" : "paper_literal"; }
const char* name_of(Variant v) { return v == Variant::ac ? "ac" : "ar"; }
const char* name_of(Side s) { return s == Side::left ? "left" : "right"; }

const char* name_of(Command c)
{
    switch (c) {
    case Command::deriv: return "deriv";
    case Command::partial: return "partial";
    case Command::transform: return "transform";
    case Command::kernel: return "kernel";
    case Command::selftest: return "selftest";
    }
    return "";
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        throw InputError("cannot write '" + path + "'");
    }
}

Json grid_json(const GridSpec& g)
{
    return Json{{"start", g.start}, {"end", g.end}, {"n", g.n}};
}

Json base_sidecar(const RunConfig& cfg, const BiOrder& order)
{
    Json j;
    j["command"] = name_of(cfg.command);
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["a_of_beta"] = cfg.a_of_beta;
    j["lambda"] = order.lambda();
    j["sigma"] = order.sigma();
    j["prefactor"] = order.prefactor();
    j["variant"] = name_of(cfg.variant);
    j["side"] = name_of(cfg.side);
    j["scheme"] = name_of(cfg.scheme);
    j["grid"] = grid_json(cfg.grid);
    j["trunc_max_terms"] = cfg.trunc_max_terms;
    return j;
}

// gnuplot script plotting every data column of the CSV against the first.
std::string plot_script(const std::string& csv_path, const Table& table, bool surface)
{
    std::string s = "set datafile separator ','\nset key autotitle columnhead\n";
    if (surface) {
        s += "splot '" + csv_path + "' using 2:1:3 with points\n";
        return s;
    }
    s += "plot";
    for (std::size_t c = 1; c < table.header.size(); ++c) {
        s += (c > 1 ? ", \\\n    " : " ") + std::string("'") + csv_path + "' using 1:" +
             std::to_string(c + 1) + " with lines";
    }
    return s + "\n";
}

void emit(const RunConfig& cfg, const Table& table, const Json* sidecar, bool surface,
          std::ostream& out)
{
    const std::string csv = to_csv(table);
    if (cfg.output_path.empty()) {
        out << csv;
        return;
    }
    write_file(cfg.output_path, csv);
    if (sidecar) {
        write_file(cfg.output_path + ".json", sidecar->dump(2) + "\n");
    }
    if (cfg.emit_plot) {
        write_file(cfg.output_path + ".gp", plot_script(cfg.output_path, table, surface));
    }
}

Grid make_grid(const GridSpec& g) { return Grid(g.start, g.end, g.n); }

int run_deriv(const RunConfig& cfg, const BiOrder& order, const OperatorOptions& opts,
              std::ostream& out)
{
    const SampledFunction f = cfg.input_path.empty()
                                  ? SampledFunction::sample(make_grid(cfg.grid),
                                                            builtin_function(cfg.builtin))
                                  : read_sampled_function(cfg.input_path);
    OperatorOutput res;
    if (cfg.side == Side::right) {
        res = right_sided_derivative(f, order, cfg.variant, opts);
    } else if (cfg.variant == Variant::ac) {
        res = ac_derivative_grid(f, order, opts);
    } else {
        res = ar_derivative_grid(f, order, opts);
    }
    Table table{{"t", "value"}, {}};
    for (std::size_t i = 0; i < res.values.size(); ++i) {
        table.rows.push_back({f.grid.node(static_cast<int>(i)), res.values[i]});
    }
    Json side = base_sidecar(cfg, order);
    side["grid"] = grid_json({f.grid.start(), f.grid.end(), f.grid.n_intervals()});
    side["input"] = cfg.input_path.empty() ? "builtin:" + cfg.builtin : cfg.input_path;
    side["truncation_estimate"] = res.truncation_estimate;
    if (cfg.side == Side::right) {
        side["tail_estimate"] = res.tail_estimate;
    }
    side["warnings"] = res.warnings;
    emit(cfg, table, &side, false, out);
    return kExitOk;
}

int run_partial(const RunConfig& cfg, const BiOrder& order, const OperatorOptions& opts,
                std::ostream& out)
{
    if (cfg.side == Side::right) {
        throw ConfigError("--side: partial derivatives are left-sided only");
    }
    SampledField field = [&] {
        if (!cfg.input_path.empty()) {
            return read_sampled_field(cfg.input_path);
        }
        // A builtin g becomes the separable field g(x) g(t).
        const auto g = builtin_function(cfg.builtin);
        return SampledField::sample(make_grid(cfg.grid), make_grid(cfg.t_grid.value_or(cfg.grid)),
                                    [&](double x, double t) { return g(x) * g(t); });
    }();
    Table table{{"t", "x", "value"}, {}};
    Json side = base_sidecar(cfg, order);
    side["grid"] = grid_json(
        {field.x_grid.start(), field.x_grid.end(), field.x_grid.n_intervals()});
    side["grid_t"] = grid_json(
        {field.t_grid.start(), field.t_grid.end(), field.t_grid.n_intervals()});
    side["input"] = cfg.input_path.empty() ? "builtin:" + cfg.builtin : cfg.input_path;
    if (cfg.alpha_t) {
        const BiOrder order_t(*cfg.alpha_t, *cfg.beta_t, cfg.a_of_beta);
        const SampledField mixed = cfg.variant == Variant::ac
                                       ? ac_mixed_xt(field, order, order_t, cfg.eval_order, opts)
                                       : ar_mixed_xt(field, order, order_t, opts);
        side["alpha_t"] = *cfg.alpha_t;
        side["beta_t"] = *cfg.beta_t;
        side["eval_order"] = cfg.eval_order == EvalOrder::xt ? "xt" : "tx";
        field = mixed;
    } else {
        for (int it = 0; it < field.t_grid.node_count(); ++it) {
            const auto row = cfg.variant == Variant::ac ? ac_partial_x(field, order, it, opts)
                                                        : ar_partial_x(field, order, it, opts);
            for (int ix = 0; ix < field.x_grid.node_count(); ++ix) {
                field.at(ix, it) = row[static_cast<std::size_t>(ix)];
            }
        }
    }
    for (int it = 0; it < field.t_grid.node_count(); ++it) {
        for (int ix = 0; ix < field.x_grid.node_count(); ++ix) {
            table.rows.push_back({field.t_grid.node(it), field.x_grid.node(ix), field.at(ix, it)});
        }
    }
    side["warnings"] = Json::array();
    emit(cfg, table, &side, true, out);
    return kExitOk;
}

int run_transform(const RunConfig& cfg, const BiOrder& order, std::ostream& out)
{
    SeriesTruncation trunc;
    trunc.max_terms = cfg.trunc_max_terms;
    trunc.mode = TruncationMode::smallest_term;
    const Grid grid = make_grid(cfg.grid);
    const bool laplace = cfg.transform == TransformKind::laplace;
    auto k = [&](double t) { return kernel_value(order, t); };
    Table table{{laplace ? "s" : "u", "series_value", "err_estimate", "quadrature_value"}, {}};
    Json side = base_sidecar(cfg, order);
    side["transform"] = laplace ? "laplace" : "sumudu";
    Json warnings = Json::array();
    for (double v : grid.nodes()) {
        SeriesResult series;
        TransformValue quad;
        if (laplace) {
            series = laplace_kernel_series(order, v, trunc);
            quad = laplace_numeric(k, TransformQuery::laplace(v), order.alpha());
        } else {
            const SumuduMode mode =
                cfg.scheme == Scheme::corrected ? SumuduMode::corrected : SumuduMode::paper_literal;
            series = sumudu_kernel_series(order, v, trunc, mode);
            quad = sumudu_numeric(k, TransformQuery::sumudu(v), order.alpha());
        }
        for (const auto& w : quad.warnings) {
            warnings.push_back(w);
        }
        table.rows.push_back({v, series.value, series.err_estimate, quad.value});
    }
    side["warnings"] = warnings;
    emit(cfg, table, &side, false, out);
    return kExitOk;
}

int run_kernel(const RunConfig& cfg, const BiOrder& order, const OperatorOptions& opts,
               std::ostream& out)
{
    Table table{{"y", "kernel", "primitive"}, {}};
    for (double y : make_grid(cfg.grid).nodes()) {
        if (y == 0.0) {
            continue;  // the kernel is singular there
        }
        const double p = cfg.scheme == Scheme::corrected
                             ? kernel_primitive(order, y, opts.trunc).value
                             : kernel_primitive_paper_literal(order, y);
        table.rows.push_back({y, kernel_value(order, y), p});
    }
    Json side = base_sidecar(cfg, order);
    side["warnings"] = Json::array();
    emit(cfg, table, &side, false, out);
    return kExitOk;
}

int run_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const SelftestReport report = selftest_suite();
    if (cfg.output_path.empty()) {
        out << report.to_json();
    } else {
        write_file(cfg.output_path, report.to_json());
    }
    err << report.to_text();
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        config.validate();
        const BiOrder order(config.alpha, config.beta, config.a_of_beta);
        OperatorOptions opts;
        opts.scheme = config.scheme;
        opts.trunc.max_terms = config.trunc_max_terms;
        switch (config.command) {
        case Command::deriv: return run_deriv(config, order, opts, out);
        case Command::partial: return run_partial(config, order, opts, out);
        case Command::transform: return run_transform(config, order, out);
        case Command::kernel: return run_kernel(config, order, opts, out);
        case Command::selftest: return run_selftest(config, out, err);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const GridError& e) {
        err << "config error: --grid: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitConfig;
}

}  // namespace biorder::cli
