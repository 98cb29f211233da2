#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "torcover/cohomological_dimension.hpp"
#include "torcover/cover.hpp"
#include "torcover/errors.hpp"
#include "torcover/face_ring.hpp"
#include "torcover/homology.hpp"
#include "torcover/simplicial_complex.hpp"

namespace torcover::cli {

using Json = nlohmann::ordered_json;

namespace {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write '" + path + "'");
}

Json torsion_json(const std::vector<mpz_class>& torsion) {
    Json out = Json::array();
    for (const auto& t : torsion)
        out.push_back(t.get_str());
    return out;
}

Json facets_json(const SimplicialComplex& L) {
    Json out = Json::array();
    std::istringstream lines(serialize_complex(L));
    for (std::string line; std::getline(lines, line);)
        out.push_back(line);
    return out;
}

Json f_vector_json(const SimplicialComplex& L) {
    Json out = Json::array();
    for (auto c : f_vector(L).counts)
        out.push_back(c);
    return out;
}

Json complex_json(const SimplicialComplex& L, const RingSpec& ring) {
    Json flags;
    flags["flag"] = is_flag(L);
    flags["acyclic"] = is_acyclic(L, ring);
    flags["vertex_count"] = L.vertex_count();
    Json out;
    out["f_vector"] = f_vector_json(L);
    out["dim"] = L.dimension();
    out["flags"] = std::move(flags);
    return out;
}

Json homology_rows(const HomologySummary& h, bool with_ranks) {
    Json rows = Json::array();
    for (const auto& d : h.degrees) {
        Json row;
        row["degree"] = d.degree;
        row["free_rank"] = d.free_rank;
        row["torsion"] = torsion_json(d.torsion);
        if (with_ranks) {
            row["cycles_rank"] = d.z_rank;
            row["boundaries_rank"] = d.b_rank;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Outcome {
    Json results;
    Json warnings = Json::array();
    std::optional<SimplicialComplex> produced; // for --output and plain generate
};

Outcome run_command(const RunConfig& config, const SimplicialComplex& L) {
    const RingSpec& ring = config.ring;
    Outcome o;
    Json& r = o.results;
    const std::string& cmd = config.command;

    if (cmd == "info") {
        Json vertices = Json::array();
        for (const auto& v : L.vertices())
            vertices.push_back(v);
        r["vertices"] = std::move(vertices);
        r["facet_count"] = L.facets().size() - (L.is_empty() ? 1 : 0);
        r["facets"] = facets_json(L);
    } else if (cmd == "flag") {
        const auto completion = flag_completion(L);
        r["is_flag"] = is_flag(L);
        r["simplices_added"] = completion.size() - L.size();
        r["completion_f_vector"] = f_vector_json(completion);
        r["completion"] = facets_json(completion);
    } else if (cmd == "homology") {
        r["acyclic"] = is_acyclic(L, ring);
        r["homology"] = homology_rows(reduced_homology(L, ring), true);
        r["cohomology"] = homology_rows(cohomology_summary(L, ring), false);
    } else if (cmd == "torus") {
        Json rows = Json::array();
        for (const auto& d : torus_homology(L).degrees)
            rows.push_back(Json{{"degree", d.degree}, {"rank", d.free_rank}});
        r["torus_homology"] = std::move(rows);
        r["cell_count"] = L.size();
    } else if (cmd == "cover-homology") {
        std::optional<FieldModuleDecomposition> split, oracle;
        if (ring.is_field()) {
            split = field_module_decomposition(L, ring);
            oracle = laurent_snf_oracle(L, ring);
        } else {
            o.warnings.push_back("extensions in the two exact sequences are not resolved over " + ring.to_string());
        }
        bool all_fg = true;
        Json rows = Json::array();
        for (const auto& d : bb_homology(L, ring)) {
            Json row;
            row["cover_degree"] = d.degree;
            row["simplicial_degree"] = d.degree - 1;
            row["trivial_sub_rank"] = d.trivial_sub_rank;
            row["group_ring_rank"] = d.group_ring_rank;
            row["trivial_quot_rank"] = d.trivial_quot_rank;
            row["htilde_torsion"] = torsion_json(d.htilde.torsion);
            row["finitely_generated"] = d.finitely_generated;
            if (split) {
                const auto& s = split->degrees[static_cast<std::size_t>(d.degree)];
                row["a"] = s.a;
                row["b"] = s.b;
                row["oracle_agrees"] = s == oracle->degrees[static_cast<std::size_t>(d.degree)];
            }
            all_fg = all_fg && d.finitely_generated;
            rows.push_back(std::move(row));
        }
        r["finitely_generated"] = all_fg;
        r["degrees"] = std::move(rows);
    } else if (cmd == "cover-cohomology") {
        const auto report = cover_cohomology_report(L, ring);
        r["ring_isomorphism"] = report.ring_isomorphism;
        Json rows = Json::array();
        for (const auto& d : report.degrees) {
            Json row;
            row["cover_degree"] = d.degree;
            row["simplicial_degree"] = d.degree - 1;
            row["fixed_subring_rank"] = d.fixed_subring.free_rank;
            row["fixed_subring_torsion"] = torsion_json(d.fixed_subring.torsion);
            row["cokernel_vanishes"] = d.cokernel_vanishes;
            row["cokernel_factor_rank"] = d.cokernel_factor.free_rank;
            row["cokernel_factor_torsion"] = torsion_json(d.cokernel_factor.torsion);
            rows.push_back(std::move(row));
        }
        r["degrees"] = std::move(rows);
        if (!report.ring_isomorphism)
            o.warnings.push_back("L is not " + ring.to_string() +
                                 "-acyclic: only the Z-fixed subring is determined; each nonvanishing cokernel is a "
                                 "Z-indexed product of copies of the cokernel factor");
    } else if (cmd == "euler") {
        r["euler_characteristic"] = euler_characteristic_cover(L);
        Json betti = Json::array();
        for (const auto& d : bb_homology(L, RingSpec::rationals()))
            betti.push_back(d.trivial_sub_rank + d.group_ring_rank);
        r["cover_betti_q"] = std::move(betti);
    } else if (cmd == "cd") {
        const auto report = cd_bb_group(L, ring);
        r["dim"] = report.dim_L;
        r["tcd"] = report.tcd_L;
        r["tcd_cover"] = report.tcd_cover;
        r["cd"] = *report.cd_exact;
        r["acyclic"] = report.is_acyclic;
    } else if (cmd == "subdivide") {
        SimplicialComplex sub;
        if (config.sub_path)
            sub = parse_complex(read_file(*config.sub_path));
        if (!is_subcomplex(sub, L))
            throw PreconditionError("L is a subcomplex of K", "the --sub complex is not a subcomplex of the input",
                                    "list only simplices of the input complex");
        auto result = relative_barycentric_subdivision(L, sub);
        r["f_vector"] = f_vector_json(result);
        r["is_flag"] = is_flag(result);
        r["sub_is_full"] = is_full(result, sub);
        r["subdivision"] = facets_json(result);
        o.produced = std::move(result);
    } else if (cmd == "generate") {
        if (!config.generator)
            throw std::invalid_argument("generate needs --generate SPEC");
        r["complex"] = facets_json(L);
        o.produced = L;
    } else {
        throw std::invalid_argument("unknown command '" + cmd + "'");
    }
    return o;
}

// Text rendering ------------------------------------------------------------

std::string scalar_text(const Json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    if (v.is_array()) {
        if (v.empty())
            return "-";
        std::string s;
        for (const auto& x : v) {
            if (!s.empty())
                s += ',';
            s += scalar_text(x);
        }
        return s;
    }
    return v.dump();
}

bool is_table(const Json& v) {
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

void render_table(const Json& rows, std::ostream& out, const std::string& indent) {
    std::vector<std::string> columns;
    for (const auto& row : rows)
        for (const auto& [k, _] : row.items())
            if (std::find(columns.begin(), columns.end(), k) == columns.end())
                columns.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& c : columns)
        width.push_back(c.size());
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            line.push_back(row.contains(columns[i]) ? scalar_text(row[columns[i]]) : "-");
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s = indent;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i)
                s += "  ";
            s += line[i] + std::string(width[i] - line[i].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        out << s << '\n';
    };
    emit(columns);
    for (const auto& line : cells)
        emit(line);
}

void render_text(const Json& node, std::ostream& out, const std::string& indent) {
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_text(value, out, indent + "  ");
        } else if (is_table(value)) {
            out << indent << key << ":\n";
            render_table(value, out, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_string()) {
            out << indent << key << ":\n";
            for (const auto& line : value)
                out << indent << "  " << line.get<std::string>() << '\n';
        } else {
            out << indent << key << ": " << scalar_text(value) << '\n';
        }
    }
}

int report_error(const RunConfig& config, std::ostream& out, std::ostream& err, int status, const std::string& kind,
                 const std::string& message, const std::string& hypothesis = {}, const std::string& remedy = {}) {
    if (config.json) {
        Json e;
        e["kind"] = kind;
        e["message"] = message;
        if (!hypothesis.empty())
            e["hypothesis"] = hypothesis;
        if (!remedy.empty())
            e["remedy"] = remedy;
        out << Json{{"error", e}}.dump(2) << '\n';
    } else {
        err << "error: " << message << '\n';
        if (!hypothesis.empty())
            err << "hypothesis: " << hypothesis << '\n';
        if (!remedy.empty())
            err << "remedy: " << remedy << '\n';
    }
    return status;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.input_path.has_value() == config.generator.has_value())
            throw std::invalid_argument("give exactly one of an input file or --generate");
        const SimplicialComplex L =
            config.generator ? generate(*config.generator) : parse_complex(read_file(*config.input_path));
        Outcome o = run_command(config, L);
        if (config.output_path && o.produced)
            write_file(*config.output_path, serialize_complex(*o.produced));

        if (config.command == "generate" && !config.json) {
            out << serialize_complex(*o.produced);
            return 0;
        }
        Json report;
        report["complex"] = complex_json(L, config.ring);
        report["ring"] = config.ring.to_string();
        report["results"] = std::move(o.results);
        report["warnings"] = std::move(o.warnings);
        if (config.json) {
            out << report.dump(2) << '\n';
        } else {
            report["complex"]["f_vector"] = scalar_text(report["complex"]["f_vector"]);
            render_text(report, out, "");
        }
        return 0;
    } catch (const PreconditionError& e) {
        return report_error(config, out, err, 2, "precondition", e.what(), e.hypothesis(), e.remedy());
    } catch (const ParseError& e) {
        return report_error(config, out, err, 1, "parse", e.what());
    } catch (const IoError& e) {
        return report_error(config, out, err, 1, "io", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(config, out, err, 1, "invalid_argument", e.what());
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homology, face rings and cohomological dimension for the cyclic cover of a torus complex"};
    RunConfig config;
    std::string input, generator, ring_token = "z", sub, output;
    app.add_option("command", config.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("file", input, "Complex file, one simplex per line ('-' for stdin)");
    app.add_option("-g,--generate", generator, "Generator spec, e.g. barycentric(rp2_six)");
    app.add_option("-r,--ring", ring_token, "Coefficient ring: z, q, f<p>, z-inv:<p>,...")->capture_default_str();
    app.add_flag("--json", config.json, "Emit JSON");
    app.add_option("--sub", sub, "subdivide: subcomplex kept intact");
    app.add_option("-o,--output", output, "subdivide, generate: write the resulting complex to this file");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return 1;
    }
    if (!input.empty())
        config.input_path = input;
    if (!generator.empty())
        config.generator = generator;
    if (!sub.empty())
        config.sub_path = sub;
    if (!output.empty())
        config.output_path = output;
    try {
        config.ring = parse_ring(ring_token);
    } catch (const ParseError& e) {
        return report_error(config, out, err, 1, "parse", e.what());
    }
    return run(config, out, err);
}

} // namespace torcover::cli
