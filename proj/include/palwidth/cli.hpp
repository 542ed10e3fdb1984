// cli.hpp -- command-line front end: normalize words, exact lengths / widths /
// spectra, the rank-3 case table, certificates, identity suites, table cache
//
// Kept in a header (thin main in tools/) so the test suite can drive commands
// in-process. Every command renders one record; --format selects text, json
// or csv views of the same data.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "palwidth/identities.hpp"
#include "palwidth/nilpotent.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/width.hpp"
#include "palwidth/words.hpp"

namespace palwidth::cli {

enum class Format { text, json, csv };

struct Options {
    int rank = 0;
    int group_class = 2;
    bool quotient = false;
    Format format = Format::text;
    std::string cache_dir;  // empty: no caching
    int trials = 10000;
    std::uint64_t seed = 0;
    int max_rank_override = 0;
    std::string word_text;
};

namespace detail {

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

inline std::string json_scalar_to_string(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

/// csv view of one flat object, or of an array of flat objects.
inline void write_csv(const nlohmann::json& payload, std::ostream& out) {
    const nlohmann::json rows = payload.is_array() ? payload : nlohmann::json::array({payload});
    if (rows.empty())
        return;
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            out << (first ? "" : ",") << csv_cell(json_scalar_to_string(it.value()));
            first = false;
        }
        out << "\n";
    }
}

inline GroupSpec spec_of(const Options& opt) {
    return GroupSpec(opt.rank, opt.group_class, opt.quotient);
}

inline void require_quotient(const Options& opt, const char* cmd) {
    if (!opt.quotient)
        throw std::invalid_argument(std::string(cmd) + " requires --quotient");
}

inline std::string witness_string(const Factorization& fact, const GroupSpec& spec) {
    std::string s;
    for (const Word& f : fact.factors) {
        if (!s.empty())
            s += "; ";
        s += render(f, spec);
    }
    return s;
}

inline std::string cache_file(const std::string& dir, const GroupSpec& spec) {
    return (std::filesystem::path(dir) /
            ("pwt1_r" + std::to_string(spec.rank) + "_c" +
             std::to_string(spec.nilpotency_class) + ".bin"))
        .string();
}

/// Loads the table from the cache when a usable file exists, otherwise builds
/// and (when caching is on) saves it. A stale or corrupt file is rebuilt.
inline LengthTable obtain_table(const Options& opt) {
    GroupSpec spec = spec_of(opt);
    if (opt.cache_dir.empty())
        return build_length_table(spec, opt.max_rank_override);
    const std::string path = cache_file(opt.cache_dir, spec);
    try {
        LengthTable table = load_length_table(path);
        if (table.spec == spec)
            return table;
    } catch (const std::exception&) {
        // fall through to a rebuild
    }
    LengthTable table = build_length_table(spec, opt.max_rank_override);
    std::filesystem::create_directories(opt.cache_dir);
    save_length_table(table, path);
    return table;
}

}  // namespace detail

inline int cmd_normalize(const Options& opt, std::ostream& out) {
    GroupSpec spec = detail::spec_of(opt);
    NormalForm g = eval(parse(opt.word_text, spec), spec);
    nlohmann::json rec;
    rec["command"] = "normalize";
    rec["input"] = opt.word_text;
    rec["normal_form"] = render(g);
    if (spec.quotient) {
        rec["code"] = code_bits_string(pack_code(g), spec);
        rec["code_decimal"] = pack_code(g);
    }
    switch (opt.format) {
    case Format::text:
        out << render(g) << "\n";
        if (spec.quotient)
            out << "code: " << code_bits_string(pack_code(g), spec) << "\n";
        break;
    case Format::json:
        out << rec.dump(2) << "\n";
        break;
    case Format::csv:
        detail::write_csv(rec, out);
        break;
    }
    return 0;
}

inline int cmd_length(const Options& opt, std::ostream& out) {
    detail::require_quotient(opt, "length");
    GroupSpec spec = detail::spec_of(opt);
    LengthTable table = detail::obtain_table(opt);
    NormalForm g = eval(parse(opt.word_text, spec), spec);
    const int len = palindromic_length(g, table);
    const std::string wit = detail::witness_string(witness(g, table), spec);
    nlohmann::json rec;
    rec["command"] = "length";
    rec["element"] = render(g);
    rec["code"] = code_bits_string(pack_code(g), spec);
    rec["length"] = len;
    rec["witness"] = wit;
    switch (opt.format) {
    case Format::text:
        out << len << "\n";
        out << "witness: " << (wit.empty() ? "e" : wit) << "\n";
        break;
    case Format::json:
        out << rec.dump(2) << "\n";
        break;
    case Format::csv:
        detail::write_csv(rec, out);
        break;
    }
    return 0;
}

inline int cmd_width(const Options& opt, std::ostream& out) {
    detail::require_quotient(opt, "width");
    LengthTable table = detail::obtain_table(opt);
    const int w = palindromic_width(table);
    nlohmann::json rec;
    rec["command"] = "width";
    rec["rank"] = opt.rank;
    rec["class"] = opt.group_class;
    rec["width"] = w;
    switch (opt.format) {
    case Format::text:
        out << w << "\n";
        break;
    case Format::json:
        out << rec.dump(2) << "\n";
        break;
    case Format::csv:
        detail::write_csv(rec, out);
        break;
    }
    return 0;
}

inline int cmd_spectrum(const Options& opt, std::ostream& out) {
    detail::require_quotient(opt, "spectrum");
    LengthTable table = detail::obtain_table(opt);
    auto counts = spectrum(table);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t len = 0; len < counts.size(); ++len)
        rows.push_back({{"length", len}, {"count", counts[len]}});
    switch (opt.format) {
    case Format::text:
        for (std::size_t len = 0; len < counts.size(); ++len)
            out << len << " " << counts[len] << "\n";
        break;
    case Format::json:
        out << rows.dump(2) << "\n";
        break;
    case Format::csv:
        detail::write_csv(rows, out);
        break;
    }
    return 0;
}

inline int cmd_table(const Options& opt, std::ostream& out, std::ostream& err) {
    detail::require_quotient(opt, "table");
    GroupSpec spec = detail::spec_of(opt);
    LengthTable table = detail::obtain_table(opt);

    // the rank-3 table additionally validates the shipped case rows
    if (spec == GroupSpec{3, 2, true}) {
        for (const RowCheck& check : validate_rank3_case_rows(table))
            if (!check.ok) {
                err << "case row " << code_bits_string(check.code, spec)
                    << " failed validation: " << check.message << "\n";
                return 1;
            }
    }

    const int n = spec.rank;
    auto alpha_bits = [&](std::uint64_t code) {
        return code_bits_string(code, spec).substr(0, static_cast<std::size_t>(n));
    };
    auto beta_bits = [&](std::uint64_t code) {
        return code_bits_string(code, spec).substr(static_cast<std::size_t>(n));
    };

    if (opt.format == Format::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint64_t code = 0; code < table.size(); ++code) {
            NormalForm g = unpack_code(code, spec);
            rows.push_back({{"code", code_bits_string(code, spec)},
                            {"alpha", alpha_bits(code)},
                            {"beta", beta_bits(code)},
                            {"length", table.lengths[code]},
                            {"witness", detail::witness_string(witness(g, table), spec)}});
        }
        out << rows.dump(2) << "\n";
        return 0;
    }
    // text and csv share the row layout
    out << "code,alpha,beta,length,witness\n";
    for (std::uint64_t code = 0; code < table.size(); ++code) {
        NormalForm g = unpack_code(code, spec);
        out << code_bits_string(code, spec) << "," << alpha_bits(code) << "," << beta_bits(code)
            << "," << static_cast<int>(table.lengths[code]) << ","
            << detail::csv_cell(detail::witness_string(witness(g, table), spec)) << "\n";
    }
    return 0;
}

inline int cmd_decompose(const Options& opt, std::ostream& out) {
    detail::require_quotient(opt, "decompose");
    GroupSpec spec = detail::spec_of(opt);
    NormalForm g = eval(parse(opt.word_text, spec), spec);
    Factorization fact = decompose_2n(g);
    const std::string factors = detail::witness_string(fact, spec);
    nlohmann::json rec;
    rec["command"] = "decompose";
    rec["element"] = render(g);
    rec["factor_count"] = fact.factors.size();
    rec["factors"] = factors;
    switch (opt.format) {
    case Format::text:
        out << fact.factors.size() << "\n";
        out << "factors: " << (factors.empty() ? "e" : factors) << "\n";
        break;
    case Format::json:
        out << rec.dump(2) << "\n";
        break;
    case Format::csv:
        detail::write_csv(rec, out);
        break;
    }
    return 0;
}

inline int cmd_certify(const Options& opt, std::ostream& out) {
    Certificate cert = commutator_support_certificate(opt.rank);
    nlohmann::json rec;
    rec["command"] = "certify";
    rec["rank"] = cert.rank;
    rec["statement1"] = cert.statement1;
    rec["statement2"] = cert.statement2.size();
    bool stmt2_all = true;
    for (const auto& [i, pass] : cert.statement2)
        stmt2_all = stmt2_all && pass;
    rec["statement2_pass"] = stmt2_all;
    nlohmann::json missing = nlohmann::json::array();
    bool stmt3_all = true;
    for (const auto& part : cert.statement3) {
        stmt3_all = stmt3_all && part.pass;
        for (const auto& [k, l] : part.missing)
            missing.push_back("z" + std::to_string(k) + "." + std::to_string(l));
    }
    rec["statement3_pass"] = stmt3_all;
    rec["statement3_missing"] = missing.size();
    rec["min_pivot_types"] = cert.min_pivot_types;
    rec["pivot_parity"] = cert.pivot_parity;
    rec["pass"] = cert.all_pass();
    switch (opt.format) {
    case Format::text:
        out << "statement1: " << (cert.statement1 ? "pass" : "FAIL") << "\n";
        out << "statement2: " << (stmt2_all ? "pass" : "FAIL") << " (" << cert.statement2.size()
            << " pivots)\n";
        out << "statement3: " << (stmt3_all ? "pass" : "FAIL") << " (" << cert.statement3.size()
            << " omitted pairs, one missing commutator each)\n";
        out << "min_pivot_types: " << (cert.min_pivot_types ? "pass" : "FAIL") << "\n";
        out << "pivot_parity: " << (cert.pivot_parity ? "pass" : "FAIL") << "\n";
        break;
    case Format::json:
        out << rec.dump(2) << "\n";
        break;
    case Format::csv:
        detail::write_csv(rec, out);
        break;
    }
    return cert.all_pass() ? 0 : 1;
}

inline int cmd_identities(const Options& opt, std::ostream& out) {
    auto reports = run_suite(opt.trials, opt.seed);
    nlohmann::json rows = nlohmann::json::array();
    bool clean = true;
    for (const auto& rep : reports) {
        clean = clean && rep.failures.empty();
        nlohmann::json row;
        row["identity"] = rep.name;
        row["trials"] = rep.trials;
        row["failures"] = rep.failures.size();
        row["reproducers"] = rep.failures;
        rows.push_back(std::move(row));
    }
    switch (opt.format) {
    case Format::text:
        for (const auto& rep : reports) {
            out << rep.name << ": trials=" << rep.trials << " failures=" << rep.failures.size()
                << "\n";
            for (const auto& f : rep.failures)
                out << "  reproducer: " << f << "\n";
        }
        break;
    case Format::json:
        out << rows.dump(2) << "\n";
        break;
    case Format::csv: {
        // reproducers flatten into one cell
        nlohmann::json flat = nlohmann::json::array();
        for (const auto& row : rows) {
            std::string rep_join;
            for (const auto& r : row["reproducers"]) {
                if (!rep_join.empty())
                    rep_join += "; ";
                rep_join += r.get<std::string>();
            }
            flat.push_back({{"identity", row["identity"]},
                            {"trials", row["trials"]},
                            {"failures", row["failures"]},
                            {"reproducers", rep_join}});
        }
        detail::write_csv(flat, out);
        break;
    }
    }
    return clean ? 0 : 1;
}

inline int cmd_palindromes(const Options& opt, std::ostream& out) {
    detail::require_quotient(opt, "palindromes");
    GroupSpec spec = detail::spec_of(opt);
    if (opt.format == Format::json) {
        nlohmann::json codes = nlohmann::json::array();
        for (const auto& [code, form] : enumerate_coded(spec))
            codes.push_back(code);
        out << codes.dump(2) << "\n";
        return 0;
    }
    write_palindrome_codes_csv(spec, out);
    return 0;
}

/// Builds the app, parses args, dispatches. argv excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact palindromic-width computations in free nilpotent groups of class <= 2 "
                 "and their quotients by generator squares"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("PALWIDTH_CACHE"))
        opt.cache_dir = env;

    std::map<std::string, Format> format_names{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    auto add_group_flags = [&](CLI::App* cmd, bool need_rank = true) {
        auto* r = cmd->add_option("--rank", opt.rank, "number of generators n >= 1");
        if (need_rank)
            r->required();
        cmd->add_option("--class", opt.group_class, "nilpotency class (1 or 2)")
            ->check(CLI::IsMember({1, 2}))
            ->capture_default_str();
        cmd->add_flag("--quotient", opt.quotient, "work in the quotient by generator squares");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
            ->capture_default_str();
        cmd->add_option("--cache", opt.cache_dir, "length-table cache directory");
        cmd->add_option("--max-rank-override", opt.max_rank_override,
                        "raise the rank limit (memory guard)");
    };

    auto* normalize = app.add_subcommand("normalize", "collect a word into its normal form");
    add_group_flags(normalize);
    add_common(normalize);
    normalize->add_option("word", opt.word_text, "word in the grammar, e.g. \"x2 x1 z2.1^-1\"")
        ->required();

    auto* length = app.add_subcommand("length", "exact palindromic length and witness");
    add_group_flags(length);
    add_common(length);
    length->add_option("word", opt.word_text)->required();

    auto* width = app.add_subcommand("width", "exact palindromic width of the quotient");
    add_group_flags(width);
    add_common(width);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "element count per exact length");
    add_group_flags(spectrum_cmd);
    add_common(spectrum_cmd);

    auto* table = app.add_subcommand("table", "per-element table: code, length, witness");
    add_group_flags(table);
    add_common(table);

    auto* decompose = app.add_subcommand("decompose", "search-free <= 2n factorization");
    add_group_flags(decompose);
    add_common(decompose);
    decompose->add_option("word", opt.word_text)->required();

    auto* certify = app.add_subcommand("certify", "commutator-support certificate");
    add_group_flags(certify);
    add_common(certify);

    auto* identities = app.add_subcommand("identities", "randomized identity suite");
    add_common(identities);
    identities->add_option("--trials", opt.trials, "trials per identity")
        ->capture_default_str();
    identities->add_option("--seed", opt.seed, "master seed")->capture_default_str();

    auto* palindromes = app.add_subcommand("palindromes", "palindrome element codes (csv)");
    add_group_flags(palindromes);
    add_common(palindromes);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code;
    }

    try {
        if (normalize->parsed())
            return cmd_normalize(opt, out);
        if (length->parsed())
            return cmd_length(opt, out);
        if (width->parsed())
            return cmd_width(opt, out);
        if (spectrum_cmd->parsed())
            return cmd_spectrum(opt, out);
        if (table->parsed())
            return cmd_table(opt, out, err);
        if (decompose->parsed())
            return cmd_decompose(opt, out);
        if (certify->parsed())
            return cmd_certify(opt, out);
        if (identities->parsed())
            return cmd_identities(opt, out);
        if (palindromes->parsed())
            return cmd_palindromes(opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace palwidth::cli
