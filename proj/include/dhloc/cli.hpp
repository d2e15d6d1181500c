#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "raster.hpp"
#include "suites.hpp"

namespace dhloc::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsage = 2;

// "lo1,lo2:hi1,hi2"
inline Box parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(Errc::Parse, "window must look like lo1,lo2:hi1,hi2");
    Box b{parse_vec(text.substr(0, colon)), parse_vec(text.substr(colon + 1))};
    if (b.lo.size() != b.hi.size()) throw Error(Errc::Parse, "window corners differ in size");
    return b;
}

inline std::vector<std::size_t> parse_resolution(const std::string& text, std::size_t rank) {
    std::vector<std::size_t> res;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        std::string part = text.substr(start, comma - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::Parse, "resolution must be positive integers");
        res.push_back(std::stoul(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (res.size() == 1) res.assign(rank, res[0]);
    if (res.size() != rank) throw Error(Errc::Parse, "resolution needs one entry per axis");
    return res;
}

inline std::vector<Vec> parse_point_list(const std::string& text) {
    std::vector<Vec> out;
    std::size_t start = 0;
    while (true) {
        auto semi = text.find(';', start);
        out.push_back(parse_vec(text.substr(start, semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

inline void require_rank(const Model& m, const Vec& x) {
    if (x.size() != m.rd->rank)
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(m.rd->rank) + " coordinates");
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(Errc::Parse, "cannot write '" + out_path + "'");
    f << text;
}

inline std::string value_text(const Rational& q, bool decimal) { return detail::number_text(q, decimal); }

// The contribution-carrying instance whose critical value is beta.
inline LocatedContribution find_contribution(const Model& m, const Vec& beta) {
    require_rank(m, beta);
    require_generic(m);
    double r = std::sqrt(to_double(m.rd->norm2(beta - m.gamma))) + 1e-6;
    for (auto& inst : enumerate_instances(m, r))
        if (inst.datum && inst.beta == beta) {
            auto c = instance_contribution(m, inst);
            return {std::move(inst), std::move(c)};
        }
    throw Error(Errc::UnknownBeta, "no critical value at " + to_string(beta));
}

struct Options {
    std::string model = "builtin:s4";
    std::string point, beta, window, res = "64", out, format = "csv", betas, suite, name;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    bool decimal = false;
};

// Selected distribution for sum/raster: explicit critical values, the nearest count, or the window sum.
inline ConeDistribution selected_sum(const Model& m, const Options& o, const Box& window) {
    if (!o.betas.empty()) {
        ConeDistribution d(m.rd);
        for (const auto& b : parse_point_list(o.betas)) d = add(d, find_contribution(m, b).dist);
        return d;
    }
    if (o.count > 0) return nearest_sum(m, o.count);
    return partial_sum(m, window);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"dhloc: exact twisted Duistermaat-Heckman distributions by norm-square localization", "dhloc"};
    app.require_subcommand(1);
    Options o;

    auto add_model = [&](CLI::App* c) {
        c->add_option("--model", o.model, "model file, or builtin:s4 / builtin:woodward");
    };
    auto* eval = app.add_subcommand("eval", "density of the distribution at a generic point");
    add_model(eval);
    eval->add_option("--point", o.point, "point \"p/q,p/q\"")->required();
    eval->add_flag("--decimal", o.decimal, "print a decimal approximation");

    auto* terms = app.add_subcommand("terms", "terms of the contribution at a critical value, or of all in a window");
    add_model(terms);
    auto* beta_opt = terms->add_option("--beta", o.beta, "critical value");
    terms->add_option("--window", o.window, "window lo1,lo2:hi1,hi2")->excludes(beta_opt);

    auto* sum = app.add_subcommand("sum", "serialized partial sum over a window");
    add_model(sum);
    sum->add_option("--window", o.window, "window lo1,lo2:hi1,hi2");
    sum->add_option("--count", o.count, "sum the given number of contributions nearest to gamma instead");
    sum->add_option("--betas", o.betas, "sum the contributions at these critical values (';'-separated)");
    sum->add_option("--out", o.out, "output file (default stdout)");

    auto* raster = app.add_subcommand("raster", "sample the density on a grid as CSV or SVG");
    add_model(raster);
    raster->add_option("--window", o.window, "window lo1,lo2:hi1,hi2")->required();
    raster->add_option("--res", o.res, "cells per axis, \"n\" or \"nx,ny\"");
    raster->add_option("--format", o.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    raster->add_option("--seed", o.seed, "seed for the sample jitter");
    raster->add_option("--count", o.count, "use the given number of contributions nearest to gamma");
    raster->add_option("--betas", o.betas, "use only the contributions at these critical values (';'-separated)");
    raster->add_option("--out", o.out, "output file (default stdout)");
    raster->add_flag("--decimal", o.decimal, "decimal coordinates and values in CSV output");

    auto* check = app.add_subcommand("check", "run an invariant suite");
    check->add_option("suite", o.suite, "algebra | truncpow | s4-golden | woodward | antisymmetry | series | all")
        ->required();
    check->add_option("--seed", o.seed, "seed for randomized checks");

    auto* exp = app.add_subcommand("export", "write a builtin model as JSON");
    exp->add_option("name", o.name, "s4 or woodward")->required()->check(CLI::IsMember({"s4", "woodward"}));
    exp->add_option("--out", o.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (*check) {
            suites::Results rs;
            try {
                rs = suites::run(o.suite, o.seed);
            } catch (const std::out_of_range& e) {
                err << "usage error: " << e.what() << "\n";
                return kUsage;
            }
            bool all = true;
            for (const auto& r : rs) {
                out << check_json_line(r) << "\n";
                all = all && r.pass;
            }
            out << json{{"suite", o.suite}, {"checks", rs.size()}, {"pass", all}}.dump() << "\n";
            return all ? kOk : kDomainError;
        }
        if (*exp) {
            emit(dump(model_json(o.name == "s4" ? builtin_s4() : builtin_woodward_su3())), o.out, out);
            return kOk;
        }

        Model m = load_model(o.model);
        if (*eval) {
            Vec x = parse_vec(o.point);
            require_rank(m, x);
            out << value_text(density_at(partial_sum(m, Box{x, x}), x), o.decimal) << "\n";
        } else if (*terms) {
            if (!o.beta.empty()) {
                const LocatedContribution lc = find_contribution(m, parse_vec(o.beta));
                for (const auto& t : lc.dist.terms()) out << to_string(t) << "\n";
            } else {
                if (o.window.empty()) throw Error(Errc::InvalidWindow, "terms needs --beta or --window");
                for (const auto& lc : contributions_in(m, parse_window(o.window))) {
                    out << "beta " << to_string(lc.instance.beta) << "\n";
                    for (const auto& t : lc.dist.terms()) out << "  " << to_string(t) << "\n";
                }
            }
        } else if (*sum) {
            Box w = o.window.empty() ? m.window_default : parse_window(o.window);
            emit(dump(distribution_json(selected_sum(m, o, w))), o.out, out);
        } else if (*raster) {
            RasterSpec spec;
            spec.window = parse_window(o.window);
            if (spec.window.dim() != m.rd->rank) throw Error(Errc::InvalidWindow, "window dimension differs from the rank");
            spec.resolution = parse_resolution(o.res, m.rd->rank);
            spec.seed = o.seed;
            spec.format = o.format == "svg" ? RasterFormat::Svg : RasterFormat::Csv;
            spec.decimal = o.decimal;
            if (spec.format == RasterFormat::Svg && m.rd->rank > 2)
                throw Error(Errc::DimensionMismatch, "SVG output needs rank <= 2");
            Raster r = rasterize(selected_sum(m, o, spec.window), spec);
            emit(spec.format == RasterFormat::Svg ? raster_svg(r) : raster_csv(r, spec.decimal), o.out, out);
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace dhloc::cli
