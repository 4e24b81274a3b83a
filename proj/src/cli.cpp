#include "gltrace/cli.hpp"

#include "gltrace/fq.hpp"
#include "gltrace/io.hpp"
#include "gltrace/measures.hpp"
#include "gltrace/symfunc.hpp"
#include "gltrace/traces.hpp"
#include "gltrace/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <variant>

namespace gltrace {

namespace {

using nlohmann::json;
using Cell = std::variant<std::string, long, double, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string cell_text(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* l = std::get_if<long>(&c)) return std::to_string(*l);
    if (const auto* d = std::get_if<double>(&c)) return fixed6(*d);
    return std::get<bool>(c) ? "true" : "false";
}

json cell_json(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* l = std::get_if<long>(&c)) return *l;
    if (const auto* d = std::get_if<double>(&c)) return std::stod(fixed6(*d));
    return std::get<bool>(c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void write_table(std::ostream& out, const Table& t, const std::string& format) {
    if (format == "json") {
        json results = json::array();
        for (const auto& row : t.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
            results.push_back(std::move(obj));
        }
        out << json{{"results", results}}.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
    }
}

// A single exact value: bare in text form, a one-cell table otherwise.
void write_scalar(std::ostream& out, const std::string& value, const std::string& format) {
    if (format == "text") {
        out << value << '\n';
        return;
    }
    write_table(out, Table{{"value"}, {{value}}}, format);
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

Rational parse_q(const std::string& text) {
    const Rational q = Rational::parse(text);
    if (q <= Rational(1)) throw std::invalid_argument("q must exceed 1");
    return q;
}

int field_order(const Rational& q) {
    if (!q.is_integer() || q > Rational(9)) throw std::invalid_argument("q must be a field order in {2,3,4,5,7,8,9}");
    return static_cast<int>(q.numerator().get_si());
}

Specialization parse_specialization(const std::string& alpha, const std::string& beta, const std::string& gamma) {
    auto a = parse_rational_list(alpha);
    auto b = parse_rational_list(beta);
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    return Specialization::finite(std::move(a), std::move(b), Rational::parse(gamma));
}

struct MeasureOptions {
    std::string measure = "custom";
    std::string r;
    std::string c;
    std::string q = "2";

    void add_to(CLI::App* sub) {
        sub->add_option("--measure", measure, "haar, delta, row or custom")
            ->check(CLI::IsMember({"haar", "delta", "row", "custom"}));
        sub->add_option("--r", r, "row frequencies, e.g. \"1/2^q,1/4\" (^q marks a geometric spread)");
        sub->add_option("--c", c, "column frequencies");
        sub->add_option("--q", q, "field size parameter")->required();
    }

    MeasureParams build() const {
        const Rational qq = parse_q(q);
        if (measure != "custom" && (!r.empty() || !c.empty())) {
            throw std::invalid_argument("--r/--c only apply to --measure custom");
        }
        if (measure == "haar") return MeasureParams::haar(qq);
        if (measure == "delta") return MeasureParams::delta(qq);
        if (measure == "row") return MeasureParams::single_row(qq);
        return MeasureParams(parse_frequency_list(r), parse_frequency_list(c), qq);
    }
};

GluTraceParams parse_glu(const std::string& components, const std::string& background) {
    json doc;
    try {
        doc = json::parse(components);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed components JSON: ") + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("components must be a JSON array");
    GluTraceParams params{{}, parse_family_json(background)};
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("tag") || !item["tag"].is_string()) {
            throw std::invalid_argument("each component needs a string \"tag\"");
        }
        auto field = [&](const char* key, const char* fallback) {
            if (!item.contains(key)) return std::string(fallback);
            if (!item[key].is_string()) throw std::invalid_argument(std::string("\"") + key + "\" must be a string");
            return item[key].get<std::string>();
        };
        params.components.push_back(
            {item["tag"].get<std::string>(), parse_specialization(field("alpha", ""), field("beta", ""), field("gamma", "1"))});
    }
    return params;
}

std::string tuple_text(const std::vector<GluTraceParams::Component>& comps, const PartitionTuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + comps[i].tag + paren(t[i]);
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact representation-theoretic quantities of GL(n,q) and central measures", "gltrace"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::function<int()> action;
    std::string format;
    std::map<std::string, std::string> formats;
    auto add_format = [&](CLI::App* sub, const std::string& fallback) {
        std::string& slot = formats[sub->get_name()];
        slot = fallback;
        sub->add_option("--format", slot, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    };
    // Scalar commands default to text; table commands accept text as csv.
    auto table_format = [&]() { return format == "text" ? std::string("csv") : format; };

    std::string q_text = "2", family_json, class_json, lambda_text, mu_text, t_text, alpha, beta;
    std::string kind = "Q", components, background = "[]", suite;
    int n = -1, max_size = 2, n_max = 10, trials = 100, depth = 3;
    unsigned workers = 0;
    std::uint64_t seed = 1;
    bool list = false;
    MeasureOptions measure;

    auto* dim = app.add_subcommand("dim", "Dimension of the irreducible labelled by a family");
    dim->add_option("--q", q_text, "field size")->required();
    dim->add_option("--family", family_json, "JSON array of blocks")->required();
    add_format(dim, "text");
    dim->callback([&] {
        action = [&] {
            write_scalar(out, green_dimension(parse_family_json(family_json), parse_q(q_text)).to_string(), format);
            return 0;
        };
    });

    auto add_kostka = [&](const std::string& name, bool polynomial) {
        auto* sub = app.add_subcommand(name, polynomial ? "Kostka-Foulkes polynomial K_{lambda,mu}(t)"
                                                        : "Kostka number K_{lambda,mu}");
        sub->add_option("--lambda", lambda_text, "shape");
        sub->add_option("--mu", mu_text, "content");
        sub->add_option("--n", n, "tabulate every pair of partitions of n");
        if (polynomial) sub->add_option("--t", t_text, "evaluate at this rational t");
        add_format(sub, "text");
        sub->callback([&, sub, polynomial] {
            action = [&, sub, polynomial] {
                auto value = [&](const Partition& l, const Partition& m) {
                    if (!polynomial) return kostka(l, m).get_str();
                    const TPolynomial p = kostka_foulkes(l, m);
                    return t_text.empty() ? p.to_string() : p.evaluate(Rational::parse(t_text)).to_string();
                };
                if (sub->count("--n")) {
                    if (n < 0) throw std::invalid_argument("n must be non-negative");
                    Table t{{"lambda", "mu", "value"}, {}};
                    for (const auto& l : partitions_of(n)) {
                        for (const auto& m : partitions_of(n)) t.rows.push_back({l.to_string(), m.to_string(), value(l, m)});
                    }
                    write_table(out, t, table_format());
                    return 0;
                }
                if (!sub->count("--lambda") || !sub->count("--mu")) throw std::invalid_argument("give --lambda and --mu, or --n");
                write_scalar(out, value(Partition::parse(lambda_text), Partition::parse(mu_text)), format);
                return 0;
            };
        });
    };
    add_kostka("kostka", false);
    add_kostka("kostka-foulkes", true);

    auto* hl = app.add_subcommand("hl-expand", "Schur expansion of a Hall-Littlewood function at rational t");
    hl->add_option("--lambda", lambda_text, "partition")->required();
    hl->add_option("--t", t_text, "rational parameter")->required();
    hl->add_option("--kind", kind, "P, Q or Qtilde")->check(CLI::IsMember({"P", "Q", "Qtilde"}));
    add_format(hl, "csv");
    hl->callback([&] {
        action = [&] {
            const Partition lambda = Partition::parse(lambda_text);
            const Rational t = Rational::parse(t_text);
            std::map<Partition, Rational> coeffs;
            if (kind == "P") coeffs = hl_p_in_schur(lambda, t);
            else if (kind == "Q") coeffs = schur_expand(hl_q_in_p(lambda, t));
            else coeffs = schur_expand(modified_hl_q(lambda, t));
            Table table{{"mu", "coefficient"}, {}};
            for (const auto& mu : partitions_of(lambda.size())) {
                const auto it = coeffs.find(mu);
                table.rows.push_back({mu.to_string(), (it == coeffs.end() ? Rational(0) : it->second).to_string()});
            }
            write_table(out, table, table_format());
            return 0;
        };
    });

    auto* trace = app.add_subcommand("trace", "Unipotent trace value on a conjugacy class");
    trace->add_option("--q", q_text, "field size")->required();
    trace->add_option("--alpha", alpha, "comma-separated alphas");
    trace->add_option("--beta", beta, "comma-separated betas");
    trace->add_option("--class", class_json, "JSON array of blocks")->required();
    add_format(trace, "text");
    trace->callback([&] {
        action = [&] {
            const auto sp = parse_specialization(alpha, beta, "1");
            write_scalar(out, unipotent_trace_value(sp, parse_family_json(class_json), parse_q(q_text)).to_string(), format);
            return 0;
        };
    });

    auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients of a trace over irreducible characters");
    coeffs->add_option("--n", n, "degree")->required();
    coeffs->add_option("--alpha", alpha, "comma-separated alphas");
    coeffs->add_option("--beta", beta, "comma-separated betas");
    coeffs->add_option("--glu", components,
                       "JSON array of {\"tag\",\"alpha\",\"beta\",\"gamma\"} for the GLU variant");
    coeffs->add_option("--background", background, "JSON family without linear blocks (GLU variant)");
    add_format(coeffs, "csv");
    coeffs->callback([&] {
        action = [&] {
            if (components.empty()) {
                Table table{{"lambda", "coefficient"}, {}};
                const auto values = trace_coefficients(parse_specialization(alpha, beta, "1"), n);
                for (const auto& lambda : partitions_of(n)) table.rows.push_back({lambda.to_string(), values.at(lambda).to_string()});
                write_table(out, table, table_format());
                return 0;
            }
            const auto params = parse_glu(components, background);
            Table table{{"lambdas", "coefficient"}, {}};
            for (const auto& [tuple, c] : glu_trace_coefficients(params, n)) {
                table.rows.push_back({tuple_text(params.components, tuple), c.to_string()});
            }
            write_table(out, table, table_format());
            return 0;
        };
    });

    auto* bireg = app.add_subcommand("biregular", "Biregular coefficients C(f) for families without the x-1 block");
    bireg->add_option("--q", q_text, "field size")->required();
    bireg->add_option("--max-size", max_size, "largest |f|");
    add_format(bireg, "csv");
    bireg->callback([&] {
        action = [&] {
            const Rational q = parse_q(q_text);
            const auto field = fq::field_make(field_order(q));
            if (max_size < 0) throw std::invalid_argument("max-size must be non-negative");
            Table table{{"family", "size", "coefficient"}, {}};
            for (int k = 0; k <= max_size; ++k) {
                for (const auto& f : fq::families_enumerate(k, field)) {
                    if (f.has_unit()) continue;
                    table.rows.push_back({family_to_json(f), static_cast<long>(k), biregular_coefficient(f, q).to_string()});
                }
            }
            write_table(out, table, table_format());
            return 0;
        };
    });

    auto* cyl = app.add_subcommand("cyl", "Cylinder probability of a Jordan type");
    measure.add_to(cyl);
    cyl->add_option("--lambda", lambda_text, "Jordan type")->required();
    add_format(cyl, "text");
    cyl->callback([&] {
        action = [&] {
            write_scalar(out, cyl_prob(measure.build(), Partition::parse(lambda_text)).to_string(), format);
            return 0;
        };
    });

    auto* sample = app.add_subcommand("sample", "One trajectory of the growth chain");
    MeasureOptions sample_measure;
    sample_measure.add_to(sample);
    sample->add_option("--nmax", n_max, "number of steps");
    sample->add_option("--seed", seed, "64-bit seed");
    add_format(sample, "csv");
    sample->callback([&] {
        action = [&] {
            if (n_max < 1) throw std::invalid_argument("nmax must be positive");
            const auto path = sample_trajectory(sample_measure.build(), n_max, seed);
            Table table{{"n", "lambda"}, {}};
            for (std::size_t k = 0; k < path.size(); ++k) table.rows.push_back({static_cast<long>(k), path[k].to_string()});
            write_table(out, table, table_format());
            return 0;
        };
    });

    auto* lln = app.add_subcommand("lln", "Monte Carlo row and column frequencies");
    MeasureOptions lln_measure;
    lln_measure.add_to(lln);
    lln->add_option("--nmax", n_max, "trajectory length");
    lln->add_option("--trials", trials, "number of trajectories");
    lln->add_option("--seed", seed, "64-bit seed");
    lln->add_option("--depth", depth, "rows and columns reported");
    lln->add_option("--workers", workers, "threads (0 = hardware)");
    add_format(lln, "csv");
    lln->callback([&] {
        action = [&] {
            const auto report = lln_experiment(lln_measure.build(), n_max, trials, seed, depth, workers);
            Table table{{"statistic", "i", "empirical", "predicted", "stderr"}, {}};
            for (const auto& row : report.rows) {
                table.rows.push_back({row.statistic, static_cast<long>(row.index), row.empirical,
                                      row.predicted.to_string(), row.std_error});
            }
            write_table(out, table, table_format());
            return 0;
        };
    });

    auto* verify = app.add_subcommand("verify", "Run a named oracle suite, or all of them");
    verify->add_option("suite", suite, "suite name or \"all\"");
    verify->add_flag("--list", list, "list suite names");
    add_format(verify, "csv");
    verify->callback([&] {
        action = [&] {
            if (list) {
                Table table{{"suite", "description"}, {}};
                for (const auto& name : verify_suite_names()) table.rows.push_back({name, verify_suite_description(name)});
                write_table(out, table, table_format());
                return 0;
            }
            if (suite.empty()) throw std::invalid_argument("name a suite, \"all\", or pass --list");
            std::vector<std::string> names{suite};
            if (suite == "all") names = verify_suite_names();
            else verify_suite_description(suite);  // rejects unknown names before running anything
            Table table{{"suite", "identity", "instance", "left", "right", "pass"}, {}};
            bool ok = true;
            for (const auto& name : names) {
                const auto report = run_verify_suite(name);
                ok = ok && report.passed();
                for (const auto& r : report.rows) table.rows.push_back({name, r.identity, r.instance, r.left, r.right, r.pass});
            }
            write_table(out, table, table_format());
            return ok ? 0 : 2;
        };
    });

    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
        bool known = false;
        for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args[0];
        if (!known) {
            err << "error: unknown subcommand '" << args[0] << "'\n" << app.help();
            return 1;
        }
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 1;
    }

    format = formats.at(app.get_subcommands().front()->get_name());
    try {
        return action ? action() : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

}  // namespace gltrace
