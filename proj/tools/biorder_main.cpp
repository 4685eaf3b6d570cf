#include "biorder/cli.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

using namespace biorder;
using namespace biorder::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, std::string& grid_text)
{
    sub->add_option("--alpha", cfg.alpha, "order alpha in (0, 1)");
    sub->add_option("--beta", cfg.beta, "order beta in (0, 1)");
    sub->add_option("--a-of-beta", cfg.a_of_beta, "normalization A(beta)");
    sub->add_option("--scheme", cfg.scheme, "corrected | paper_literal")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Scheme>{{"corrected", Scheme::corrected},
                                          {"paper_literal", Scheme::paper_literal}}));
    sub->add_option("--grid", grid_text, "start:end:n");
    sub->add_option("--output", cfg.output_path, "CSV path (stdout when omitted)");
    sub->add_flag("--emit-plot", cfg.emit_plot, "also write <output>.gp");
}

void add_operator(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--variant", cfg.variant, "ac | ar")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Variant>{{"ac", Variant::ac}, {"ar", Variant::ar}}));
    sub->add_option("--input", cfg.input_path, "CSV input");
    sub->add_option("--builtin", cfg.builtin, "const:c | linear | monomial:k | exp:c | sine:w");
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    std::string grid_text;
    std::string grid_t_text;
    double alpha_t = 0.0;
    double beta_t = 0.0;

    CLI::App app{"Bi-order fractional derivatives and their transforms"};
    app.require_subcommand(1);

    auto* deriv = app.add_subcommand("deriv", "derivative of a sampled function");
    add_common(deriv, cfg, grid_text);
    add_operator(deriv, cfg);
    deriv->add_option("--side", cfg.side, "left | right")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Side>{{"left", Side::left}, {"right", Side::right}}));

    auto* partial = app.add_subcommand("partial", "partial or mixed derivative of f(x, t)");
    add_common(partial, cfg, grid_text);
    add_operator(partial, cfg);
    partial->add_option("--side", cfg.side, "left");
    partial->add_option("--grid-t", grid_t_text, "t grid of a builtin field");
    auto* at = partial->add_option("--alpha-t", alpha_t, "t-direction alpha (mixed operator)");
    auto* bt = partial->add_option("--beta-t", beta_t, "t-direction beta (mixed operator)");
    partial->add_option("--eval-order", cfg.eval_order, "xt | tx")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, EvalOrder>{{"xt", EvalOrder::xt}, {"tx", EvalOrder::tx}}));

    auto* transform = app.add_subcommand("transform", "kernel transform: series vs quadrature");
    add_common(transform, cfg, grid_text);
    transform->add_option("--transform", cfg.transform, "laplace | sumudu")
        ->transform(CLI::CheckedTransformer(std::map<std::string, TransformKind>{
            {"laplace", TransformKind::laplace}, {"sumudu", TransformKind::sumudu}}));

    auto* kernel = app.add_subcommand("kernel", "kernel and its primitive");
    add_common(kernel, cfg, grid_text);

    auto* selftest = app.add_subcommand("selftest", "run the oracle suite");
    selftest->add_option("--output", cfg.output_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (deriv->parsed()) cfg.command = Command::deriv;
    if (partial->parsed()) cfg.command = Command::partial;
    if (transform->parsed()) cfg.command = Command::transform;
    if (kernel->parsed()) cfg.command = Command::kernel;
    if (selftest->parsed()) cfg.command = Command::selftest;

    if (const char* env = std::getenv("BIORDER_TRUNC_MAX_TERMS")) {
        const auto v = parse_number(env);
        if (!v || *v < 1 || *v > 1e7 || *v != static_cast<int>(*v)) {
            std::cerr << "config error: BIORDER_TRUNC_MAX_TERMS must be a positive integer\n";
            return kExitConfig;
        }
        cfg.trunc_max_terms = static_cast<int>(*v);
    }
    try {
        if (!grid_text.empty()) {
            cfg.grid = parse_grid_spec(grid_text);
        }
        if (!grid_t_text.empty()) {
            cfg.t_grid = parse_grid_spec(grid_t_text);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    if (*at) cfg.alpha_t = alpha_t;
    if (*bt) cfg.beta_t = beta_t;
    return run(cfg, std::cout, std::cerr);
}
