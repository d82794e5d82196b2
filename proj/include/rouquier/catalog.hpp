#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <string>
#include <vector>

#include "builtins.hpp"
#include "io.hpp"
#include "validate.hpp"

#ifndef ROUQUIER_DATA_DIR
#define ROUQUIER_DATA_DIR "data"
#endif

namespace rouquier {

inline std::string default_data_dir() {
    if (const char* env = std::getenv("ROUQUIER_DATA")) return env;
    return ROUQUIER_DATA_DIR;
}

// Built-in families plus validated files from the data directory, cached by name.
class Catalog {
  public:
    explicit Catalog(std::string data_dir = default_data_dir()) : dir_(std::move(data_dir)) {}

    const std::string& data_dir() const { return dir_; }

    // "Z5", "I2(7)" (also I2_7, I2.7), "G4", "1", "A1" or a file stem in the data dir
    static std::string canonical_name(const std::string& name) {
        static const std::regex dih(R"(I2[\(_\.](\d+)\)?)"), cyc(R"([ZC](\d+))");
        std::smatch m;
        if (std::regex_match(name, m, dih)) return "I2(" + m[1].str() + ")";
        if (std::regex_match(name, m, cyc)) return "Z" + m[1].str();
        if (name == "A1") return "Z2";
        if (name == "trivial") return "1";
        return name;
    }

    std::shared_ptr<const GroupDatum> get(const std::string& name) const { return entry(name).datum; }

    const ValidatedGroup& entry(const std::string& raw) const {
        std::string name = canonical_name(raw);
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(name); it != cache_.end()) return it->second;
        ValidatedGroup g = build(name);
        return cache_.emplace(name, std::move(g)).first->second;
    }

    ValidatedGroup load_file(const std::string& path) const {
        GroupDatum W = io::group_from_json(io::read_json_file(path));
        return validate(std::move(W), resolver());
    }

    ValidatedGroup adopt(GroupDatum W) const { return validate(std::move(W), resolver()); }

    std::vector<std::string> file_groups() const {
        std::vector<std::string> out;
        std::error_code ec;
        std::filesystem::path d = std::filesystem::path(dir_) / "groups";
        if (!std::filesystem::is_directory(d, ec)) return out;
        for (auto& e : std::filesystem::directory_iterator(d, ec))
            if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
        std::sort(out.begin(), out.end());
        return out;
    }

    Resolver resolver() const {
        return [this](const std::string& n) { return get(n); };
    }

  private:
    std::string dir_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::string, ValidatedGroup> cache_;

    ValidatedGroup build(const std::string& name) const {
        std::smatch m;
        static const std::regex dih(R"(I2\((\d+)\))"), cyc(R"(Z(\d+))");
        if (name == "1") return adopt(builtin::trivial_group());
        if (name == "G4") return adopt(builtin::g4_group());
        if (std::regex_match(name, m, dih)) return adopt(builtin::dihedral_group(std::stoi(m[1].str())));
        if (std::regex_match(name, m, cyc)) return adopt(builtin::cyclic_group(std::stoi(m[1].str())));
        std::filesystem::path p = std::filesystem::path(dir_) / "groups" / (name + ".json");
        if (!std::filesystem::exists(p)) throw DomainError("unknown group '" + name + "'");
        return load_file(p.string());
    }
};

}  // namespace rouquier
