// Command-line front end: families, decompositions, invariants, golden checks.
#include <CLI11.hpp>
#include <rouquier/rouquier.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace rouquier;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, ambiguous = 2, mismatch = 3 };

struct Options {
    std::string group;
    std::string format = "md";
    long prime = 0;
    std::string golden;
    std::string out;
    int rank = 5, defect = 5;
    long cap = 20;
};

std::shared_ptr<const GroupDatum> load(const Catalog& cat, const std::string& g) {
    std::error_code ec;
    if (g.size() > 5 && g.substr(g.size() - 5) == ".json") {
        if (!std::filesystem::exists(g, ec)) throw DataError("file", "no such file " + g);
        return cat.load_file(g).datum;
    }
    return cat.get(g);
}

json names(const GroupDatum& W, const std::vector<int>& idx) {
    json a = json::array();
    for (int i : idx) a.push_back(W.characters[i].name);
    return a;
}

json column_json(const GroupDatum& W, const VirtualCharacter& v) {
    json m = json::object();
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i]) m[W.characters[i].name] = v[i];
    return m;
}

std::string column_md(const GroupDatum& W, const VirtualCharacter& v) {
    std::string s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (!v[i]) continue;
        if (!s.empty()) s += " + ";
        if (v[i] != 1) s += std::to_string(v[i]) + "*";
        s += W.characters[i].name;
    }
    return s;
}

json partition_json(const GroupDatum& W, const BlockPartition& b) {
    json a = json::array();
    for (std::size_t i = 0; i < b.parts.size(); ++i)
        a.push_back({{"characters", names(W, b.parts[i])}, {"status", b.exact[i] ? "exact" : "upper-bound"}});
    return a;
}

std::string partition_md(const GroupDatum& W, const BlockPartition& b) {
    std::string s;
    for (std::size_t i = 0; i < b.parts.size(); ++i)
        s += "- " + W.character_names(b.parts[i]) + (b.exact[i] ? "" : "  (upper bound)") + "\n";
    return s;
}

json prime_json(const GroupDatum& W, const PrimeBlocks& pb) {
    json cols = json::array();
    for (auto& c : pb.decomp.columns)
        cols.push_back({{"multiplicities", column_json(W, c.chars)}, {"resolved", c.resolved}, {"note", c.note}});
    return {{"prime", pb.spec.p},
            {"ideal", pb.spec.to_string()},
            {"coarse", partition_json(W, pb.coarse)},
            {"blocks", partition_json(W, pb.blocks)},
            {"columns", cols},
            {"notes", pb.decomp.notes}};
}

std::string prime_md(const GroupDatum& W, const PrimeBlocks& pb) {
    std::ostringstream os;
    os << "### p = " << pb.spec.p << ", ideal " << pb.spec.to_string() << "\n\nblocks:\n"
       << partition_md(W, pb.blocks) << "\ncolumns:\n";
    for (auto& c : pb.decomp.columns)
        os << "- " << column_md(W, c.chars) << (c.resolved ? "" : "  [unresolved: " + c.note + "]") << "\n";
    for (auto& n : pb.decomp.notes) os << "\nnote: " << n << "\n";
    return os.str();
}

void emit(const Options& o, const json& j, const std::string& md) {
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << md;
}

int cmd_list(const Options& o, const Catalog& cat) {
    json a = json::array();
    std::ostringstream md;
    std::vector<std::string> all{"1", "G4"};
    for (int d = 2; d <= 12; ++d) all.push_back("Z" + std::to_string(d));
    for (int n = 3; n <= 30; ++n) all.push_back("I2(" + std::to_string(n) + ")");
    for (auto& n : all) {
        a.push_back({{"name", n}, {"source", "built-in"}});
        md << n << "\n";
    }
    for (auto& n : cat.file_groups()) {
        a.push_back({{"name", n}, {"source", "file"}});
        md << n << " (file)\n";
    }
    emit(o, {{"format", io::kFormat}, {"groups", a}}, md.str());
    return ok;
}

int cmd_validate(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    std::ostringstream md;
    md << W->name << ": valid (order " << W->order << ", " << W->num_irr() << " characters, " << W->n_reflections
       << " reflections)\n";
    emit(o, {{"format", io::kFormat}, {"group", W->name}, {"valid", true}, {"order", W->order}}, md.str());
    return ok;
}

int cmd_families(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    BlockEngine be(cat, o.cap);
    std::ostringstream md;
    json j{{"format", io::kFormat}, {"group", W->name}};
    bool exact = true;
    if (o.prime) {
        json ps = json::array();
        md << "# " << W->name << " blocks at p = " << o.prime << "\n\n";
        for (auto& spec : be.primes_for(*W, o.prime)) {
            const PrimeBlocks& pb = be.hecke_blocks_at(*W, spec);
            exact = exact && pb.blocks.all_exact();
            ps.push_back(prime_json(*W, pb));
            md << partition_md(*W, pb.blocks);
        }
        j["primes"] = ps;
    } else {
        FamilyResult fr = be.families(*W);
        exact = fr.families.all_exact();
        j["bad_primes"] = fr.bad_primes;
        j["families"] = partition_json(*W, fr.families);
        md << "# " << W->name << ": " << fr.families.parts.size() << " families\n\n" << partition_md(*W, fr.families);
    }
    j["exact"] = exact;
    emit(o, j, md.str());
    return exact ? ok : ambiguous;
}

int cmd_decomp(const Options& o, const Catalog& cat) {
    if (!o.prime) throw CLI::ValidationError("decomp", "--prime is required");
    auto W = load(cat, o.group);
    BlockEngine be(cat, o.cap);
    json ps = json::array();
    std::ostringstream md;
    md << "# " << W->name << " decomposition at p = " << o.prime << "\n\n";
    bool resolved = true;
    for (auto& spec : be.primes_for(*W, o.prime)) {
        const PrimeBlocks& pb = be.hecke_blocks_at(*W, spec);
        for (auto& c : pb.decomp.columns) resolved = resolved && c.resolved;
        resolved = resolved && pb.blocks.all_exact();
        ps.push_back(prime_json(*W, pb));
        md << prime_md(*W, pb) << "\n";
    }
    emit(o, {{"format", io::kFormat}, {"group", W->name}, {"primes", ps}, {"exact", resolved}}, md.str());
    return resolved ? ok : ambiguous;
}

int cmd_invariants(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    json a = json::array();
    std::ostringstream md;
    md << "| character | f | a | A | b | N | special |\n|---|---|---|---|---|---|---|\n";
    for (auto& r : compute_invariants(*W)) {
        a.push_back({{"name", r.name},
                     {"f", io::to_json(r.f)},
                     {"a", r.a.get_str()},
                     {"A", r.A.get_str()},
                     {"b", r.b},
                     {"N", r.N.get_str()},
                     {"special", r.special}});
        md << "| " << r.name << " | " << r.f.to_string() << " | " << r.a.get_str() << " | " << r.A.get_str() << " | "
           << r.b << " | " << r.N.get_str() << " | " << (r.special ? "yes" : "") << " |\n";
    }
    emit(o, {{"format", io::kFormat}, {"group", W->name}, {"characters", a}}, md.str());
    return ok;
}

int cmd_bad_primes(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    auto ps = bad_primes(*W);
    std::string md;
    for (std::size_t i = 0; i < ps.size(); ++i) md += (i ? ", " : "") + std::to_string(ps[i]);
    emit(o, {{"format", io::kFormat}, {"group", W->name}, {"bad_primes", ps}}, (md.empty() ? "none" : md) + "\n");
    return ok;
}

int cmd_constructible(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    BlockEngine be(cat, o.cap);
    ConstructibleEngine ce(be);
    const auto& cs = ce.of(*W);
    FamilyResult fr = be.families(*W);
    json a = json::array();
    std::ostringstream md;
    md << "# " << W->name << ": " << cs.size() << " constructible characters\n\n";
    for (auto& v : cs) {
        json e{{"multiplicities", column_json(*W, v)}};
        std::string check;
        for (auto& F : fr.families.parts) {
            if (!v[F[0]]) continue;
            try {
                bool good = construc_pairing_check(*W, v, F);
                e["pairing_zero"] = good;
                check = good ? "" : "  (pairing with the family is nonzero)";
            } catch (const DomainError& err) {
                e["pairing_zero"] = nullptr;
                check = std::string("  (") + err.what() + ")";
            }
        }
        a.push_back(e);
        md << "- " << column_md(*W, v) << check << "\n";
    }
    emit(o, {{"format", io::kFormat}, {"group", W->name}, {"constructible", a}}, md.str());
    return ok;
}

int cmd_symbols_verify(const Options& o) {
    FamilyReport rep = verify_family_finest(o.rank, o.defect);
    std::ostringstream md;
    md << "rank <= " << o.rank << ", odd defect <= " << o.defect << ": " << rep.families << " families, " << rep.symbols
       << " symbols, " << rep.bridges_checked << " bridges, " << rep.violations << " violations\n";
    for (auto& m : rep.messages) md << "- " << m << "\n";
    emit(o,
         {{"format", io::kFormat},
          {"rank", o.rank},
          {"defect", o.defect},
          {"families", rep.families},
          {"symbols", rep.symbols},
          {"bridges", rep.bridges_checked},
          {"violations", rep.violations},
          {"messages", rep.messages}},
         md.str());
    return rep.violations ? mismatch : ok;
}

// Compare against a golden transcription; returns the list of differences.
std::vector<std::string> golden_diff(const Catalog& cat, const GroupDatum& W, const json& g, long cap) {
    std::vector<std::string> diff;
    BlockEngine be(cat, cap);
    FamilyResult fr = be.families(W);
    auto as_sets = [](const json& parts) {
        std::set<std::set<std::string>> s;
        for (auto& p : parts) s.insert(p.get<std::set<std::string>>());
        return s;
    };
    json computed = json::array();
    for (auto& p : fr.families.parts) computed.push_back(names(W, p));
    if (as_sets(computed) != as_sets(g.at("families")))
        diff.push_back("families: expected " + g.at("families").dump() + ", computed " + computed.dump());
    if (!fr.families.all_exact()) diff.push_back("families: some parts are only upper bounds");
    if (g.contains("bad_primes") && g.at("bad_primes").get<std::vector<long>>() != fr.bad_primes)
        diff.push_back("bad primes: expected " + g.at("bad_primes").dump() + ", computed " + json(fr.bad_primes).dump());
    if (g.contains("f_values"))
        for (auto& [name, v] : g.at("f_values").items()) {
            Cyclotomic want = io::cyclotomic_from_json(v), got = f_of(W, W.index_of(name));
            if (!(got / want).is_root_of_unity())
                diff.push_back("f(" + name + "): expected " + want.to_string() + ", computed " + got.to_string());
        }
    if (g.contains("decomposition"))
        for (auto& d : g.at("decomposition")) {
            long p = d.at("prime").get<long>();
            std::set<int> chars;
            for (auto& n : d.at("characters")) chars.insert(W.index_of(n.get<std::string>()));
            std::set<std::map<std::string, long>> want, got;
            for (auto& c : d.at("columns")) want.insert(c.get<std::map<std::string, long>>());
            const PrimeBlocks& pb = be.hecke_blocks(W, p);
            for (auto& c : pb.decomp.columns) {
                auto s = detail::support(c.chars);
                if (std::all_of(s.begin(), s.end(), [&](int x) { return chars.count(x) > 0; })) {
                    if (!c.resolved) diff.push_back("p=" + std::to_string(p) + ": column " + column_md(W, c.chars) + " unresolved");
                    got.insert(column_json(W, c.chars).get<std::map<std::string, long>>());
                }
            }
            if (want != got)
                diff.push_back("p=" + std::to_string(p) + " columns on " + d.at("characters").dump() + ": expected " +
                               json(want).dump() + ", computed " + json(got).dump());
        }
    if (g.contains("constructible")) {
        std::set<std::map<std::string, long>> want, got;
        for (auto& c : g.at("constructible")) want.insert(c.get<std::map<std::string, long>>());
        ConstructibleEngine ce(be);
        for (auto& v : ce.of(W)) got.insert(column_json(W, v).get<std::map<std::string, long>>());
        if (want != got) diff.push_back("constructible: expected " + json(want).dump() + ", computed " + json(got).dump());
    }
    return diff;
}

int cmd_verify_paper(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    std::string path = o.golden.empty() ? cat.data_dir() + "/golden/" + W->name + ".json" : o.golden;
    json g = io::read_json_file(path);
    auto diff = golden_diff(cat, *W, g, o.cap);
    std::ostringstream md;
    md << W->name << " against " << path << ": " << (diff.empty() ? "match" : "MISMATCH") << "\n";
    for (auto& d : diff) md << "- " << d << "\n";
    emit(o, {{"format", io::kFormat}, {"group", W->name}, {"golden", path}, {"match", diff.empty()}, {"differences", diff}},
         md.str());
    return diff.empty() ? ok : mismatch;
}

int cmd_export(const Options& o, const Catalog& cat) {
    auto W = load(cat, o.group);
    std::string text = io::to_json(*W).dump(1) + "\n";
    if (o.out.empty()) std::cout << text;
    else {
        std::ofstream f(o.out);
        if (!f) throw DataError("file", "cannot write " + o.out);
        f << text;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Families of characters of reflection groups via blocks of Hecke algebras"};
    app.require_subcommand(1);
    Options o;
    std::string data_dir = default_data_dir();
    app.add_option("--data", data_dir, "data directory (default: $ROUQUIER_DATA or the install path)");

    auto with_group = [&](CLI::App* c, bool format = true) {
        c->add_option("-g,--group", o.group, "group name (G4, Z3, I2(7), I2.7) or a .json file")->required();
        if (format) c->add_option("--format", o.format, "md or json")->check(CLI::IsMember({"md", "json"}));
        return c;
    };

    auto* list = app.add_subcommand("list", "list known groups");
    list->add_option("--format", o.format)->check(CLI::IsMember({"md", "json"}));
    auto* validate_cmd = with_group(app.add_subcommand("validate", "check a group datum"));
    auto* fam = with_group(app.add_subcommand("families", "family partition, or blocks at one prime"));
    fam->add_option("-p,--prime", o.prime, "report the blocks at this prime only");
    fam->add_option("--cap", o.cap, "weight cap of the indecomposability search");
    auto* dec = with_group(app.add_subcommand("decomp", "projective columns at a prime"));
    dec->add_option("-p,--prime", o.prime)->required();
    dec->add_option("--cap", o.cap, "weight cap of the indecomposability search");
    auto* inv = with_group(app.add_subcommand("invariants", "f, a, A, b, N per character"));
    auto* bad = with_group(app.add_subcommand("bad-primes", "primes dividing some f"));
    auto* con = with_group(app.add_subcommand("constructible", "constructible characters"));
    auto* sym = app.add_subcommand("symbols", "symbol combinatorics");
    sym->require_subcommand(1);
    auto* symv = sym->add_subcommand("verify", "families versus d-series, exhaustively");
    symv->add_option("--rank", o.rank);
    symv->add_option("--defect", o.defect);
    symv->add_option("--format", o.format)->check(CLI::IsMember({"md", "json"}));
    auto* ver = with_group(app.add_subcommand("verify-paper", "compare with a bundled golden file"));
    ver->add_option("--golden", o.golden, "golden file (default: <data>/golden/<group>.json)");
    auto* exp = with_group(app.add_subcommand("export", "write a group datum as JSON"), false);
    exp->add_option("-o,--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }
    try {
        Catalog cat(data_dir);
        if (*list) return cmd_list(o, cat);
        if (*validate_cmd) return cmd_validate(o, cat);
        if (*fam) return cmd_families(o, cat);
        if (*dec) return cmd_decomp(o, cat);
        if (*inv) return cmd_invariants(o, cat);
        if (*bad) return cmd_bad_primes(o, cat);
        if (*con) return cmd_constructible(o, cat);
        if (*symv) return cmd_symbols_verify(o);
        if (*ver) return cmd_verify_paper(o, cat);
        if (*exp) return cmd_export(o, cat);
    } catch (const DataError& e) {
        std::cerr << "data error [" << e.invariant << "]: " << e.what() << "\n";
        return usage;
    } catch (const AmbiguityError& e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        return ambiguous;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
