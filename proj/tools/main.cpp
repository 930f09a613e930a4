#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <dedekind/errors.hpp>

#include "commands.hpp"

namespace {

using dedekind::cli::GlobalOptions;

std::optional<dedekind::Int> parse_h(const std::string& s) {
    if (s.empty()) return std::nullopt;
    dedekind::Int h = dedekind::int_from_decimal(s);
    if (h <= 0) throw dedekind::ParseError("--h must be positive");
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime-ideal and prime-ideal-power tests for finite-rank Dedekind domains"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::string primality = "witnesses";
    app.add_flag("--json", opts.json, "machine-readable JSON on stdout");
    app.add_option("--cap", opts.oracle_cap,
                   "cross-check verdicts against the enumeration oracle for rings up to this size");
    app.add_option("--primality", primality,
                   "deterministic primality backend: witnesses (default) or aks")
        ->check(CLI::IsMember({"witnesses", "aks"}));

    std::string ring_path, ideal_path, matrix_path, presentation_path, h_text;

    auto add_h_option = [&](CLI::App* sub, const char* help) {
        // frees the short -h so the spec's --h flag can exist
        sub->set_help_flag("--help", "print help");
        sub->add_option("--h", h_text, help);
    };
    auto add_ring_ideal = [&](CLI::App* sub, bool with_h) {
        sub->add_option("--ring", ring_path, "ring file (JSON)")->required();
        sub->add_option("--ideal", ideal_path, "ideal file (JSON)")->required();
        if (with_h)
            add_h_option(sub,
                         "positive multiple of both generator norms (decimal); "
                         "defaults to N(alpha)*N(beta)");
        sub->fallthrough();
    };

    CLI::App* validate = app.add_subcommand("validate", "check the ring axioms of a table");
    validate->add_option("--ring", ring_path, "ring file (JSON)")->required();
    validate->fallthrough();

    CLI::App* norm = app.add_subcommand("norm", "norm of an ideal");
    add_ring_ideal(norm, true);

    CLI::App* hnf = app.add_subcommand("hnf", "Hermite normal form with transform");
    hnf->add_option("--matrix", matrix_path, "matrix file (text rows, or - for stdin)")
        ->required();
    add_h_option(hnf, "positive multiple of the lattice determinant (decimal)");
    hnf->fallthrough();

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form with transforms");
    snf->add_option("--matrix", matrix_path, "matrix file (text rows, or - for stdin)")
        ->required();
    add_h_option(snf, "positive multiple of |det| (decimal)");
    snf->fallthrough();

    CLI::App* quotient =
        app.add_subcommand("quotient", "basis representation of O/I, or unit ideal");
    add_ring_ideal(quotient, true);

    CLI::App* is_prime = app.add_subcommand("is-prime", "is the ideal prime?");
    add_ring_ideal(is_prime, true);

    CLI::App* is_prime_power =
        app.add_subcommand("is-prime-power", "is the ideal a power of a prime ideal?");
    add_ring_ideal(is_prime_power, true);

    CLI::App* is_field = app.add_subcommand("is-field", "is a basis-represented ring a field?");
    is_field->add_option("--presentation", presentation_path, "presentation file (JSON)")
        ->required();
    is_field->fallthrough();

    CLI::App* is_local = app.add_subcommand("is-local", "is a basis-represented ring local?");
    is_local->add_option("--presentation", presentation_path, "presentation file (JSON)")
        ->required();
    is_local->fallthrough();

    CLI11_PARSE(app, argc, argv);

    opts.primality.backend = primality == "aks" ? dedekind::PrimalityBackend::Aks
                                                : dedekind::PrimalityBackend::Witnesses;

    try {
        const auto h = parse_h(h_text);
        if (validate->parsed())
            return dedekind::cli::cmd_validate(ring_path, opts, std::cout, std::cerr);
        if (norm->parsed())
            return dedekind::cli::cmd_norm(ring_path, ideal_path, h, opts, std::cout, std::cerr);
        if (hnf->parsed())
            return dedekind::cli::cmd_hnf(matrix_path, h, opts, std::cout, std::cerr);
        if (snf->parsed())
            return dedekind::cli::cmd_snf(matrix_path, h, opts, std::cout, std::cerr);
        if (quotient->parsed())
            return dedekind::cli::cmd_quotient(ring_path, ideal_path, h, opts, std::cout,
                                               std::cerr);
        if (is_prime->parsed())
            return dedekind::cli::cmd_is_prime(ring_path, ideal_path, h, opts, std::cout,
                                               std::cerr);
        if (is_prime_power->parsed())
            return dedekind::cli::cmd_is_prime_power(ring_path, ideal_path, h, opts, std::cout,
                                                     std::cerr);
        if (is_field->parsed())
            return dedekind::cli::cmd_is_field(presentation_path, opts, std::cout, std::cerr);
        if (is_local->parsed())
            return dedekind::cli::cmd_is_local(presentation_path, opts, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dedekind::cli::kExitError;
    }
    return dedekind::cli::kExitError;
}
