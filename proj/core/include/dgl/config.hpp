#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgl {

// Line-based `key = value` files with `#` comments and one optional [sweep]
// section whose keys are stored with a "sweep." prefix.
class Config {
public:
    static Config parse_file(const std::filesystem::path& path);
    static Config parse_string(const std::string& text); // for tests

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;                       // throws config_error
    std::string get_or(const std::string& key, const std::string& dflt) const;
    double number(const std::string& key) const;
    double number_or(const std::string& key, double dflt) const;
    long integer(const std::string& key) const;
    long integer_or(const std::string& key, long dflt) const;
    std::vector<double> number_list(const std::string& key) const; // comma-separated

    void set(const std::string& key, const std::string& value);
    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
    std::map<std::string, int> lines_; // key -> defining line, for error messages
    int line_of(const std::string& key) const;
};

} // namespace dgl
