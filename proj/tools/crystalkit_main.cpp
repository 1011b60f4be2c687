#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crystalkit/verify.hpp"

// Command-line front end.  Exit codes: 0 success, 1 usage, 2 parse,
// 3 validation, 4 budget, 5 suite failure.

namespace {

using namespace crystalkit;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file " + path);
    out << text;
}

std::string kind_of(const Document& doc) {
    if (std::holds_alternative<Multisegment>(doc)) return "ms";
    if (std::holds_alternative<Tableau>(doc)) return "tab";
    return "pbw";
}

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("shape must be comma-separated integers, got \"" + text + "\"");
        }
    }
    try {
        return Partition(parts);
    } catch (const ValidationError& err) {
        throw UsageError(std::string("bad shape: ") + err.what());
    }
}

std::string normalize_suite(std::string name) {
    for (char& c : name)
        if (c == '-') c = '_';
    if (name == "ks") return "ks_conditions";
    return name;
}

struct ApplyArgs {
    std::string op;
    int index = 0;
    bool has_index = false;
    bool trace = false;
    std::string in, out;
};

int run_apply(const ApplyArgs& args) {
    std::string op = args.op;
    if (op == "e*") op = "estar";
    if (op == "f*") op = "fstar";
    const bool indexed = op == "e" || op == "f" || op == "estar" || op == "fstar" ||
                         op == "sigma";
    if (!indexed && op != "sigma-chain" && op != "flip")
        throw UsageError("unknown operator \"" + args.op + "\"");
    if (indexed && !args.has_index) throw UsageError("operator " + args.op + " needs --index");
    if (!indexed && args.has_index)
        throw UsageError("operator " + args.op + " takes no --index");
    if (args.trace && op != "sigma-chain") throw UsageError("--trace only applies to sigma-chain");

    const Document doc = parse_document(read_input(args.in));
    const std::string kind = kind_of(doc);
    const bool star = op == "estar" || op == "fstar";
    const bool ms_only = op == "sigma" || op == "sigma-chain" || op == "flip";
    if (ms_only && kind != "ms")
        throw UsageError("operator " + args.op + " applies to ms documents only");
    if (star && kind == "tab")
        throw UsageError("star operators do not apply to tab documents");

    auto emit = [&args](const Document& result) {
        write_output(args.out, serialize(result) + "\n");
        return 0;
    };
    auto emit_null = [&args]() {
        write_output(args.out, "null\n");
        return 0;
    };

    if (kind == "tab") {
        const Tableau& b = std::get<Tableau>(doc);
        auto result = op == "f" ? b.f(args.index) : b.e(args.index);
        return result ? emit(*result) : emit_null();
    }
    if (kind == "pbw") {
        const LusztigDatum& a = std::get<LusztigDatum>(doc);
        if (op == "f") return emit(a.f(args.index));
        if (op == "fstar") return emit(a.f_star(args.index));
        auto result = op == "e" ? a.e(args.index) : a.e_star(args.index);
        return result ? emit(*result) : emit_null();
    }
    const Multisegment& m = std::get<Multisegment>(doc);
    if (op == "f") return emit(m.f(args.index));
    if (op == "fstar") return emit(m.f_star(args.index));
    if (op == "e") {
        auto result = m.e(args.index);
        return result ? emit(*result) : emit_null();
    }
    if (op == "estar") {
        auto result = m.e_star(args.index);
        return result ? emit(*result) : emit_null();
    }
    if (op == "sigma") return emit(sigma(m, args.index));
    if (op == "flip") return emit(m.flip());
    if (!args.trace) return emit(sigma_chain(m));

    const SigmaChainTrace trace = sigma_chain_trace(m);
    nlohmann::ordered_json doc_out;
    doc_out["kind"] = "trace";
    doc_out["input"] = to_json(m);
    auto steps = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        nlohmann::ordered_json step;
        step["index"] = k + 1;
        step["exponent"] = trace.steps[k].exponent;
        step["stage"] = to_json(trace.steps[k].stage);
        steps.push_back(std::move(step));
    }
    doc_out["steps"] = std::move(steps);
    doc_out["result"] = to_json(trace.result);
    write_output(args.out, doc_out.dump(2) + "\n");
    return 0;
}

int run_convert(const std::string& to, const std::string& in, const std::string& out) {
    const Document doc = parse_document(read_input(in));
    const std::string from = kind_of(doc);
    Document result = doc;
    if (from == "pbw" && to == "ms")
        result = to_multisegment(std::get<LusztigDatum>(doc));
    else if (from == "ms" && to == "pbw")
        result = from_multisegment(std::get<Multisegment>(doc));
    else if (from == "tab" && to == "ms")
        result = std::get<Tableau>(doc).to_multisegment();
    else
        throw UsageError("unsupported conversion " + from + " -> " + to);
    write_output(out, serialize(result) + "\n");
    return 0;
}

int run_verify(const std::string& raw_name, const SuiteParams& params, const std::string& out) {
    const std::string name = normalize_suite(raw_name);
    if (name == "battery") {
        auto reports = run_battery();
        auto doc = nlohmann::ordered_json::array();
        bool all_passed = true;
        for (const auto& rep : reports) {
            all_passed = all_passed && rep.passed();
            doc.push_back(rep.to_json());
        }
        write_output(out, doc.dump(2) + "\n");
        return all_passed ? 0 : 5;
    }
    const SuiteReport rep = run_suite(name, params);
    write_output(out, rep.to_json().dump(2) + "\n");
    return rep.passed() ? 0 : 5;
}

int run_graph(const GraphParams& params, const std::string& format, const std::string& out) {
    const CrystalGraph graph = build_graph(params);
    if (format == "dot") {
        write_output(out, graph.to_dot());
        return 0;
    }
    if (format == "json") {
        write_output(out, graph.to_json().dump(2) + "\n");
        return 0;
    }
    throw UsageError("format must be dot or json, got \"" + format + "\"");
}

int run_enumerate(int rank, int max_size, bool count_only, const std::string& out) {
    if (count_only) {
        write_output(out, std::to_string(count_multisegments(rank, max_size)) + "\n");
        return 0;
    }
    std::string text;
    for (const auto& m : enumerate_multisegments(rank, max_size))
        text += serialize(m) + "\n";
    write_output(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal operator toolkit for multisegments, tableaux, and Lusztig data"};
    app.require_subcommand(1);

    ApplyArgs apply_args;
    auto* apply = app.add_subcommand("apply", "Apply a crystal operator to a document");
    apply->add_option("op", apply_args.op,
                      "Operator: e, f, e*, f*, sigma, sigma-chain, flip")
        ->required();
    auto* index_opt = apply->add_option("--index", apply_args.index, "Operator index (1..rank)");
    apply->add_flag("--trace", apply_args.trace, "Print per-step exponents and stages");
    apply->add_option("--input", apply_args.in, "Input file, - for stdin");
    apply->add_option("--output", apply_args.out, "Output file, - for stdout");

    std::string convert_to, convert_in, convert_out;
    auto* convert = app.add_subcommand("convert", "Convert a document between realizations");
    convert->add_option("to", convert_to, "Target kind: ms, tab, pbw")->required();
    convert->add_option("--input", convert_in, "Input file, - for stdin");
    convert->add_option("--output", convert_out, "Output file, - for stdout");

    std::string suite_name, verify_shape, verify_out;
    SuiteParams suite_params;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite_name, "Suite name, or battery for the full set")
        ->required();
    verify->add_option("--rank", suite_params.rank, "Rank n of sl(n+1)");
    verify->add_option("--max-size", suite_params.max_size, "Largest total box count");
    verify->add_option("--shape", verify_shape, "Partition as comma-separated parts");
    verify->add_flag("--fixture", suite_params.include_chain_fixture,
                     "Include the shipped rank-5 sample");
    verify->add_option("--output", verify_out, "Report file, - for stdout");

    std::string graph_model, graph_shape, graph_format = "dot", graph_out;
    GraphParams graph_params;
    auto* graph = app.add_subcommand("graph", "Export a crystal graph");
    graph->add_option("model", graph_model, "Element kind: ms, tab, pbw")->required();
    graph->add_option("--rank", graph_params.rank, "Rank n of sl(n+1)");
    graph->add_option("--max-size", graph_params.max_size, "Largest total box count");
    graph->add_option("--shape", graph_shape, "Partition as comma-separated parts");
    graph->add_option("--format", graph_format, "dot or json");
    graph->add_flag("--star", graph_params.include_star, "Add starred operator edges");
    graph->add_option("--output", graph_out, "Output file, - for stdout");

    int enum_rank = 2, enum_max_size = 0;
    bool enum_count = false;
    std::string enum_out;
    auto* enumerate = app.add_subcommand("enumerate", "List multisegments up to a size bound");
    enumerate->add_option("--rank", enum_rank, "Rank n of sl(n+1)");
    enumerate->add_option("--max-size", enum_max_size, "Largest total box count");
    enumerate->add_flag("--count", enum_count, "Print only the number of elements");
    enumerate->add_option("--output", enum_out, "Output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (apply->parsed()) {
            apply_args.has_index = index_opt->count() > 0;
            return run_apply(apply_args);
        }
        if (convert->parsed()) return run_convert(convert_to, convert_in, convert_out);
        if (verify->parsed()) {
            if (!verify_shape.empty()) suite_params.shape = parse_shape(verify_shape);
            return run_verify(suite_name, suite_params, verify_out);
        }
        if (graph->parsed()) {
            if (graph_model == "ms")
                graph_params.model = Model::ms;
            else if (graph_model == "tab")
                graph_params.model = Model::tab;
            else if (graph_model == "pbw")
                graph_params.model = Model::pbw;
            else
                throw UsageError("model must be ms, tab, or pbw, got \"" + graph_model + "\"");
            if (!graph_shape.empty()) graph_params.shape = parse_shape(graph_shape);
            return run_graph(graph_params, graph_format, graph_out);
        }
        return run_enumerate(enum_rank, enum_max_size, enum_count, enum_out);
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 1;
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 2;
    } catch (const ValidationError& err) {
        std::cerr << "validation error: " << err.what() << "\n";
        return 3;
    } catch (const IntegrityError& err) {
        std::cerr << "integrity error: " << err.what() << "\n";
        return 3;
    } catch (const BudgetError& err) {
        std::cerr << "budget error: " << err.what() << "\n";
        return 4;
    }
}
