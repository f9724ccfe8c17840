#include "dgl/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dgl/errors.hpp"

namespace dgl {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw config_error("unterminated section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            if (section != "sweep")
                throw config_error("unknown section [" + section + "]", line_no);
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) throw config_error("expected `key = value`", line_no);
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw config_error("empty key", line_no);
        if (!section.empty()) key = section + "." + key;
        if (cfg.entries_.count(key)) throw config_error("duplicate key `" + key + "`", line_no);
        cfg.entries_[key] = value;
        cfg.lines_[key] = line_no;
    }
    return cfg;
}

Config Config::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

int Config::line_of(const std::string& key) const {
    auto it = lines_.find(key);
    return it == lines_.end() ? 0 : it->second;
}

std::string Config::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw config_error("missing required key `" + key + "`");
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& dflt) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? dflt : it->second;
}

double Config::number(const std::string& key) const {
    const std::string raw = get(key);
    try {
        size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw config_error("key `" + key + "` is not a number: `" + raw + "`", line_of(key));
    }
}

double Config::number_or(const std::string& key, double dflt) const {
    return has(key) ? number(key) : dflt;
}

long Config::integer(const std::string& key) const {
    const std::string raw = get(key);
    try {
        size_t pos = 0;
        const long v = std::stol(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw config_error("key `" + key + "` is not an integer: `" + raw + "`", line_of(key));
    }
}

long Config::integer_or(const std::string& key, long dflt) const {
    return has(key) ? integer(key) : dflt;
}

std::vector<double> Config::number_list(const std::string& key) const {
    const std::string raw = get(key);
    std::vector<double> values;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw config_error("key `" + key + "` has a non-numeric entry: `" + item + "`",
                               line_of(key));
        }
    }
    if (values.empty()) throw config_error("key `" + key + "` has an empty value list", line_of(key));
    return values;
}

void Config::set(const std::string& key, const std::string& value) { entries_[key] = value; }

} // namespace dgl
