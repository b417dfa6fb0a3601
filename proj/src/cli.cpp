#include "rroch/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rroch/errors.hpp"
#include "rroch/rr.hpp"
#include "rroch/series.hpp"

namespace rroch {

namespace {

long parse_integer(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        const long value = std::stol(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw BadParam("malformed " + what + ": " + text);
    }
}

int emit_report(const VerificationReport& report, const std::string& format, std::ostream& out)
{
    if (format == "json")
        out << report.to_json() << "\n";
    else
        out << report.to_text();
    return report.pass() ? 0 : 1;
}

int emit_series(const UnivariateSeries& series, nlohmann::json meta, const std::string& format,
                std::ostream& out)
{
    if (format == "json") {
        meta["order"] = series.order();
        meta["p"] = series.eps_order();
        meta["coeffs"] = series.coeff_strings();
        out << meta.dump() << "\n";
    } else {
        out << series.str() << "\n";
    }
    return 0;
}

UnivariateSeries build_named_series(const std::string& name, long j, long m, int p, int order)
{
    if (name == "Bj")
        return bott_series(j, order);
    if (name == "T")
        return inverse_todd_series(order);
    if (name == "Sj")
        return scaled_inverse_todd_series(j, order);
    if (name == "todd")
        return series_invert(inverse_todd_series(order));
    if (name == "twisted")
        return twisted_inverse_todd_series(order, p);
    if (name == "exp")
        return exp_series(order);
    if (name == "exp-eps")
        return exp_eps_series(order, p);
    if (name == "monomial")
        return monomial_series(m, order);
    if (name == "one-minus-t-pow")
        return one_minus_t_pow(j, order);
    if (name == "geometric")
        return geometric_series(order);
    throw BadParam("unknown series name: " + name);
}

/// Law file format: {"order": D, "p": P, "terms": [{"u": a, "v": b,
/// "coeff": "c"}, ...]}; "p" defaults to 1 and coefficients use the textual
/// form accepted by parse_coefficient.
BivariateSeries parse_law_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw BadParam("cannot open law file: " + path);
    nlohmann::json parsed;
    try {
        in >> parsed;
        const int order = parsed.at("order").get<int>();
        const int p = parsed.value("p", 1);
        if (order < 1 || order > 16)
            throw BadParam("law order must be between 1 and 16");
        BivariateSeries law(order, p);
        for (const auto& term : parsed.at("terms")) {
            const int deg_u = term.at("u").get<int>();
            const int deg_v = term.at("v").get<int>();
            const Coefficient coeff =
                parse_coefficient(term.at("coeff").get<std::string>(), p);
            law.set_coeff(deg_u, deg_v, law.coeff(deg_u, deg_v) + coeff);
        }
        return law;
    } catch (const nlohmann::json::exception& e) {
        throw BadParam("law file " + path + ": " + e.what());
    }
}

Integer chi_oracle(int d, long n)
{
    if (n >= 0)
        return binomial(n + d, static_cast<unsigned long>(d));
    if (n >= -static_cast<long>(d))
        return 0;
    const Integer value = binomial(-n - 1, static_cast<unsigned long>(d));
    return d % 2 == 0 ? value : Integer(-value);
}

int run_table_chi(int d, long n_min, long n_max, const std::string& format, std::ostream& out,
                  std::ostream& err)
{
    if (n_min > n_max)
        throw BadParam("n-min must not exceed n-max");
    const Space space{{d}};
    const TheoryRing ring{space, Theory::K, 1};
    const MorphismDesc to_point = projection(space, {0});

    std::vector<Integer> values;
    for (long n = n_min; n <= n_max; ++n) {
        const TruncatedPolynomial cls = line_element(ring, LineClass{{static_cast<int>(n)}});
        const Coefficient pushed = pushforward(to_point, cls).coefficient({});
        const Rational value = pushed.part(0);
        if (value.get_den() != 1)
            throw Error("Euler characteristic came out non-integral");
        const Integer direct = value.get_num();
        const Integer expected = chi_oracle(d, n);
        if (direct != expected) {
            err << "cross-check failed at n = " << n << ": direct image " << direct.get_str()
                << ", combinatorial value " << expected.get_str() << "\n";
            return 1;
        }
        values.push_back(direct);
    }

    if (format == "json") {
        nlohmann::json j;
        j["d"] = d;
        j["n_min"] = n_min;
        j["n_max"] = n_max;
        nlohmann::json chi = nlohmann::json::array();
        for (const auto& v : values)
            chi.push_back(v.get_str());
        j["chi"] = chi;
        out << j.dump() << "\n";
    } else {
        bool first = true;
        for (const auto& v : values) {
            if (!first)
                out << ", ";
            out << v.get_str();
            first = false;
        }
        out << "\n";
    }
    return 0;
}

} // namespace

Transformation parse_transformation(const std::string& text)
{
    if (text == "ch")
        return Transformation::chern_character();
    if (text == "id")
        return Transformation::identity(Theory::K);
    if (text.rfind("psi:", 0) == 0)
        return Transformation::adams(parse_integer(text.substr(4), "psi parameter"));
    if (text.rfind("ch-eps:", 0) == 0) {
        const long p = parse_integer(text.substr(7), "nilpotency order");
        if (p < 2 || p > 16)
            throw BadParam("nilpotency order must be between 2 and 16");
        return Transformation::twisted_chern_character(static_cast<int>(p));
    }
    throw BadParam("unknown transformation: " + text + " (expected psi:J, ch, ch-eps:P, or id)");
}

Space parse_space(const std::string& text)
{
    if (text == "pt")
        return Space{};
    Space space;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        space.dims.push_back(static_cast<int>(parse_integer(item, "dimension")));
    if (space.dims.empty())
        throw BadParam("empty space description");
    for (int d : space.dims)
        if (d < 0)
            throw BadParam("dimensions must be nonnegative");
    if (space.factor_count() > 8)
        throw BadParam("at most 8 factors");
    if (space.total_dim() > 16)
        throw BadParam("total dimension capped at 16");
    return space;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact Riemann-Roch verification on products of projective spaces", "rroch"};
    app.require_subcommand(1);

    auto* fgl = app.add_subcommand("fgl", "formal group law checks");
    fgl->require_subcommand(1);
    auto* fgl_check = fgl->add_subcommand("check", "check the group law axioms");
    std::string fgl_law{"additive"};
    int fgl_order = 8;
    int fgl_p = 1;
    std::string fgl_format{"text"};
    fgl_check->add_option("--law", fgl_law, "additive | multiplicative | custom:FILE")
        ->required();
    fgl_check->add_option("--order", fgl_order, "truncation order")->check(CLI::Range(2, 16));
    fgl_check->add_option("--p", fgl_p, "nilpotency order of the coefficients")
        ->check(CLI::Range(1, 8));
    fgl_check->add_option("--format", fgl_format)->check(CLI::IsMember({"text", "json"}));

    auto* series = app.add_subcommand("series", "builtin series");
    series->require_subcommand(1);
    auto* series_show = series->add_subcommand("show", "print one series");
    std::string series_name;
    long series_j = 0;
    long series_m = 1;
    int series_p = 2;
    int series_order = 8;
    std::string series_format{"text"};
    series_show
        ->add_option("--name", series_name,
                     "Bj | T | Sj | todd | twisted | exp | exp-eps | monomial | "
                     "one-minus-t-pow | geometric")
        ->required();
    series_show->add_option("--j", series_j, "power for Bj, Sj, one-minus-t-pow");
    series_show->add_option("--m", series_m, "degree for monomial");
    series_show->add_option("--p", series_p, "nilpotency order for the twisted variants")
        ->check(CLI::Range(2, 16));
    series_show->add_option("--order", series_order, "truncation order")
        ->check(CLI::Range(0, 32));
    series_show->add_option("--format", series_format)->check(CLI::IsMember({"text", "json"}));

    auto* assoc = app.add_subcommand("assoc", "associated series of a transformation");
    std::string assoc_phi;
    int assoc_order = 8;
    std::string assoc_format{"text"};
    assoc->add_option("--phi", assoc_phi, "psi:J | ch | ch-eps:P | id")->required();
    assoc->add_option("--order", assoc_order, "probe dimension; the series has one order less")
        ->check(CLI::Range(1, 16));
    assoc->add_option("--format", assoc_format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "verify a direct-image formula");
    verify->require_subcommand(1);

    auto* v_imm = verify->add_subcommand("immersion", "closed-immersion formula");
    std::string imm_phi;
    std::string imm_space;
    int imm_factor = 0;
    int imm_codim = 1;
    int imm_samples = 0;
    std::string imm_format{"text"};
    v_imm->add_option("--phi", imm_phi, "psi:J | ch | ch-eps:P | id")->required();
    v_imm->add_option("--space", imm_space, "ambient space, e.g. 2,1")->required();
    v_imm->add_option("--factor", imm_factor, "embedded factor");
    v_imm->add_option("--codim", imm_codim, "codimension")->required();
    v_imm->add_option("--samples", imm_samples, "check only the first N basis elements")
        ->check(CLI::PositiveNumber);
    v_imm->add_option("--format", imm_format)->check(CLI::IsMember({"text", "json"}));

    auto* v_proj = verify->add_subcommand("projective", "projective-morphism formula");
    std::string proj_phi;
    std::string proj_space;
    std::vector<int> proj_drop;
    int proj_samples = 0;
    std::string proj_format{"text"};
    v_proj->add_option("--phi", proj_phi, "psi:J | ch | id")->required();
    v_proj->add_option("--space", proj_space, "source space, e.g. 2,1")->required();
    v_proj->add_option("--drop", proj_drop, "factors the projection drops, e.g. 0,2")
        ->required()
        ->delimiter(',');
    v_proj->add_option("--samples", proj_samples, "check only the first N basis elements")
        ->check(CLI::PositiveNumber);
    v_proj->add_option("--format", proj_format)->check(CLI::IsMember({"text", "json"}));

    auto* v_cube = verify->add_subcommand("cube", "the five compatibility squares");
    std::string cube_space;
    long cube_j = 2;
    int cube_samples = 0;
    std::string cube_format{"text"};
    v_cube->add_option("--space", cube_space, "base space, e.g. 2,1")->required();
    v_cube->add_option("--j", cube_j, "Adams power, nonzero")->required();
    v_cube->add_option("--samples", cube_samples, "check only the first N basis elements")
        ->check(CLI::PositiveNumber);
    v_cube->add_option("--format", cube_format)->check(CLI::IsMember({"text", "json"}));

    auto* v_unique = verify->add_subcommand("unique-k", "canonical morphism into K-theory");
    std::string unique_space;
    std::string unique_format{"text"};
    v_unique->add_option("--space", unique_space, "base space, e.g. 2,1")->required();
    v_unique->add_option("--format", unique_format)->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "closed-form tables");
    table->require_subcommand(1);
    auto* table_chi = table->add_subcommand(
        "chi", "Euler characteristics chi(P^d, O(n)), cross-checked combinatorially");
    int chi_d = 1;
    long chi_n_min = -8;
    long chi_n_max = 8;
    std::string chi_format{"text"};
    table_chi->add_option("--d", chi_d, "projective space dimension")
        ->required()
        ->check(CLI::Range(0, 12));
    table_chi->add_option("--n-min", chi_n_min, "first twist")->check(CLI::Range(-64L, 64L));
    table_chi->add_option("--n-max", chi_n_max, "last twist")->check(CLI::Range(-64L, 64L));
    table_chi->add_option("--format", chi_format)->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (fgl_check->parsed())
            return [&] {
                VerificationReport report;
                if (fgl_law == "additive")
                    report = check_group_law(GroupLaw::additive(fgl_order, fgl_p).law);
                else if (fgl_law == "multiplicative")
                    report = check_group_law(GroupLaw::multiplicative(fgl_order, fgl_p).law);
                else if (fgl_law.rfind("custom:", 0) == 0)
                    report = check_group_law(parse_law_file(fgl_law.substr(7)));
                else
                    throw BadParam("unknown law: " + fgl_law);
                return emit_report(report, fgl_format, out);
            }();

        if (series_show->parsed())
            return emit_series(
                build_named_series(series_name, series_j, series_m, series_p, series_order),
                nlohmann::json{{"name", series_name}}, series_format, out);

        if (assoc->parsed()) {
            const Transformation phi = parse_transformation(assoc_phi);
            return emit_series(associated_series(phi, assoc_order),
                               nlohmann::json{{"phi", phi.name()}}, assoc_format, out);
        }

        if (v_imm->parsed()) {
            const MorphismDesc imm =
                linear_immersion(parse_space(imm_space), imm_factor, imm_codim);
            std::optional<int> limit;
            if (v_imm->count("--samples") > 0)
                limit = imm_samples;
            return emit_report(verify_immersion_rr(parse_transformation(imm_phi), imm, limit),
                               imm_format, out);
        }

        if (v_proj->parsed()) {
            const MorphismDesc proj = projection(parse_space(proj_space), proj_drop);
            std::optional<int> limit;
            if (v_proj->count("--samples") > 0)
                limit = proj_samples;
            return emit_report(verify_projective_rr(parse_transformation(proj_phi), proj, limit),
                               proj_format, out);
        }

        if (v_cube->parsed()) {
            std::optional<int> limit;
            if (v_cube->count("--samples") > 0)
                limit = cube_samples;
            return emit_report(verify_cube(parse_space(cube_space), cube_j, limit), cube_format,
                               out);
        }

        if (v_unique->parsed())
            return emit_report(verify_unique_k_morphism(parse_space(unique_space)),
                               unique_format, out);

        if (table_chi->parsed())
            return run_table_chi(chi_d, chi_n_min, chi_n_max, chi_format, out, err);

        err << "no command selected\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rroch
