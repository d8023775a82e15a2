// Command-line front end: parse characteristic data, run the analysis, and
// render text or machine-readable reports.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 enumeration
// cap exceeded.

#include "torb/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using torb::CharMatrix;
using torb::Int;
using torb::IntMatrix;
using torb::Json;

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + msg) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rows separated by '/' (or newlines in files), entries by whitespace.
IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::vector<std::pair<int, int>> row_pos; // position of each row's first token
    std::vector<Int> row;
    int line = 1, col = 0;
    int row_line = 0, row_col = 0;

    std::string token;
    int tok_line = 0, tok_col = 0;
    auto flush_token = [&]() {
        if (token.empty()) return;
        bool ok = true;
        std::size_t start = (token[0] == '+' || token[0] == '-') ? 1 : 0;
        if (start == token.size()) ok = false;
        for (std::size_t i = start; i < token.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(token[i]))) ok = false;
        if (!ok) throw ParseError(tok_line, tok_col, "expected an integer, got \"" + token + "\"");
        if (row.empty()) {
            row_line = tok_line;
            row_col = tok_col;
        }
        row.emplace_back(token);
        token.clear();
    };
    auto flush_row = [&]() {
        flush_token();
        if (row.empty()) return; // forgiving about blank rows / trailing separators
        rows.push_back(std::move(row));
        row_pos.emplace_back(row_line, row_col);
        row.clear();
    };

    for (char ch : text) {
        if (ch == '\n') {
            flush_row();
            ++line;
            col = 0;
            continue;
        }
        ++col;
        if (ch == '/') {
            flush_row();
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            flush_token();
        } else if (ch == '+' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
            if (token.empty()) {
                tok_line = line;
                tok_col = col;
            }
            token += ch;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        }
    }
    flush_row();

    if (rows.empty()) throw ParseError(1, 1, "empty matrix");
    std::size_t n = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != n)
            throw ParseError(row_pos[i].first, row_pos[i].second,
                             "row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(n) + " (matrix must be square)");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

Int json_to_int(const Json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("invalid integer string \"" + v.get<std::string>() + "\"");
        }
    }
    throw ParseError("expected an integer, got " + v.dump());
}

CharMatrix parse_json_document(const std::string& content) {
    Json doc;
    try {
        doc = Json::parse(content);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    // Accept either a bare document or a report whose "input" echoes one.
    const Json* src = &doc;
    if (!doc.contains("columns") && !doc.contains("spindle") && doc.contains("input"))
        src = &doc.at("input");

    if (src->contains("spindle")) {
        const Json& sp = src->at("spindle");
        if (!sp.is_array() || sp.size() != 2)
            throw ParseError("\"spindle\" must be an array of two integers");
        return CharMatrix::from_spindle(json_to_int(sp[0]), json_to_int(sp[1]));
    }
    if (!src->contains("columns")) throw ParseError("document has neither \"columns\" nor \"spindle\"");
    const Json& cols = src->at("columns");
    if (!cols.is_array() || cols.empty()) throw ParseError("\"columns\" must be a nonempty array");
    std::size_t n = cols.size();
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!cols[j].is_array() || cols[j].size() != n)
            throw ParseError("column " + std::to_string(j + 1) + " must have " +
                             std::to_string(n) + " entries (matrix must be square)");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = json_to_int(cols[j][i]);
    }
    return CharMatrix::from_matrix(std::move(m));
}

struct InputOpts {
    std::string matrix;
    std::string file;
    std::vector<std::string> spindle;
    std::string format = "text";
    long long cap = 1000000;
};

CharMatrix load_input(const InputOpts& in) {
    int sources = (!in.matrix.empty() ? 1 : 0) + (!in.file.empty() ? 1 : 0) +
                  (!in.spindle.empty() ? 1 : 0);
    if (sources != 1)
        throw ParseError("exactly one of --matrix, --file, --spindle is required");
    if (!in.spindle.empty()) {
        auto parse_label = [](const std::string& s) {
            try {
                return Int(s);
            } catch (const std::exception&) {
                throw ParseError("invalid spindle label \"" + s + "\"");
            }
        };
        return CharMatrix::from_spindle(parse_label(in.spindle[0]), parse_label(in.spindle[1]));
    }
    if (!in.matrix.empty()) return CharMatrix::from_matrix(parse_matrix_text(in.matrix));
    std::ifstream f(in.file);
    if (!f) throw ParseError("cannot open file: " + in.file);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string content = buf.str();
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') return parse_json_document(content);
    return CharMatrix::from_matrix(parse_matrix_text(content));
}

void add_input_options(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--matrix", in.matrix,
                    "matrix as text: rows separated by '/', entries by spaces. "
                    "NOTE: the COLUMNS are the facet labels.");
    cmd->add_option("--file", in.file,
                    "read the matrix from a file ('/'-separated rows, or a JSON document "
                    "with a \"columns\" array of facet labels)");
    cmd->add_option("--spindle", in.spindle, "two nonzero labels m n of a one-dimensional spindle")
        ->expected(2);
    cmd->add_option("--format", in.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap", in.cap, "group enumeration cap (default 1000000)")
        ->check(CLI::PositiveNumber);
}

void emit(const std::string& format, const std::string& text, const Json& doc) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run_analyze(const InputOpts& in) {
    CharMatrix c = load_input(in);
    torb::ClassificationReport rep = torb::classify(c, Int(in.cap));
    emit(in.format, torb::analyze_text(c, rep), torb::analyze_json(c, rep));
    return 0;
}

int run_graph(const InputOpts& in) {
    CharMatrix c = load_input(in);
    torb::validate(c);
    torb::GraphArtifacts art = torb::graph_artifacts(c);
    emit(in.format, torb::graph_text(c, art), torb::graph_json(c, art));
    return 0;
}

int run_cohomology(const InputOpts& in, int max_degree) {
    CharMatrix c = load_input(in);
    torb::validate(c);
    if (max_degree < 0) max_degree = 2 * c.n + 6;
    torb::CohomologyArtifacts art = torb::cohomology_artifacts(c, max_degree, Int(in.cap));
    emit(in.format, torb::cohomology_text(c, art), torb::cohomology_json(c, art));
    return art.verdict.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torb: classification and equivariant cohomology of torus orbifolds "
                 "over a suspended simplex, from an integer characteristic matrix "
                 "(columns = facet labels) or a spindle pair"};
    app.require_subcommand(1);

    InputOpts in_analyze, in_graph, in_cohom;
    int max_degree = -1;

    CLI::App* analyze =
        app.add_subcommand("analyze", "determinant, invariant factors, the finite group G, "
                                      "the fixed-point subgroup and the degree-3 cohomology");
    add_input_options(analyze, in_analyze);

    CLI::App* graph = app.add_subcommand(
        "graph", "axial function, Thom classes and integrality constants of the orbit graph");
    add_input_options(graph, in_graph);

    CLI::App* cohom = app.add_subcommand(
        "cohomology", "ring presentation, Hilbert table and brute-force verification");
    add_input_options(cohom, in_cohom);
    cohom->add_option("--max-degree", max_degree,
                      "largest cohomological degree to verify (default 2n+6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(in_analyze);
        if (graph->parsed()) return run_graph(in_graph);
        return run_cohomology(in_cohom, max_degree);
    } catch (const torb::Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const torb::SingularCharacteristic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
