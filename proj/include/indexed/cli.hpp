#ifndef INDEXED_CLI_HPP
#define INDEXED_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "indexed/json.hpp"
#include "indexed/json_text.hpp"

// Front end for `jsondoc (validate|fmt|stats) (FILE|-) [--pretty] [--output PATH]`.
namespace indexed::cli {

enum exit_code : int { ok = 0, invalid_document = 1, usage_or_io = 2 };

enum class Command { validate, fmt, stats };

struct Config {
    Command command = Command::validate;
    std::string input;  // "-" reads stdin
    bool pretty = false;
    std::optional<std::string> output;
};

namespace detail {

inline std::optional<std::string> read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) return std::nullopt;
    std::string text(std::istreambuf_iterator<char>(file), {});
    if (file.bad()) return std::nullopt;
    return text;
}

inline std::string stats_report(const json::JsonDoc& doc) {
    std::ostringstream os;
    os << "nodes: " << json::count_nodes(doc) << '\n';
    os << "max_depth: " << json::max_depth(doc) << '\n';
    const auto counts = json::count_by_jty(doc);
    for (auto t : json::all_jtys) os << json::to_string(t) << ": " << counts[t] << '\n';
    return os.str();
}

}  // namespace detail

/// Run one command. args excludes the program name. Results go to out (or
/// --output), diagnostics to err.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    Config cfg;
    CLI::App app{"Validate, format and inspect JSON documents whose root is an object"};
    app.name("jsondoc");
    app.require_subcommand(1, 1);

    struct Sub {
        Command command;
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {Command::validate, "validate", "Check that the input is a well-formed document"},
        {Command::fmt, "fmt", "Re-serialize the document"},
        {Command::stats, "stats", "Print node counts and nesting depth"},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("input", cfg.input, "Input file, or - for stdin")->required();
        sub->add_option("--output,-o", cfg.output, "Write results to PATH instead of stdout");
        if (s.command == Command::fmt) {
            sub->add_flag("--pretty", cfg.pretty, "Indent with two spaces, one member per line");
        }
        sub->callback([&cfg, c = s.command] { cfg.command = c; });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_or_io;
    }

    auto text = detail::read_input(cfg.input, in);
    if (!text) {
        err << "error: io: cannot read " << cfg.input << '\n';
        return usage_or_io;
    }

    std::string result;
    try {
        auto doc = json::parse(*text);
        switch (cfg.command) {
            case Command::validate: result = "valid\n"; break;
            case Command::fmt:
                result = json::serialize(doc, cfg.pretty ? json::Layout::pretty : json::Layout::compact);
                result += '\n';
                break;
            case Command::stats: result = detail::stats_report(doc); break;
        }
    } catch (const json::parse_error& e) {
        const auto& d = e.detail();
        err << "error: " << json::to_string(d.kind) << " at " << d.line << ':' << d.column << ": "
            << d.message << '\n';
        return invalid_document;
    }

    if (cfg.output) {
        std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
        if (!(file << result)) {
            err << "error: io: cannot write " << *cfg.output << '\n';
            return usage_or_io;
        }
    } else {
        out << result;
    }
    return ok;
}

}  // namespace indexed::cli

#endif  // INDEXED_CLI_HPP
