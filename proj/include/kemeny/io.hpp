#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/errors.hpp"

namespace kemeny {

// Profile text format: one ranking per line, candidate names comma-separated
// best to worst, UTF-8. Lines starting with '#' and blank lines are ignored.

namespace detail {

inline std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

}  // namespace detail

inline Profile parse_profile(std::istream& in) {
    std::vector<std::vector<std::string>> raw;
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        std::vector<std::string> names;
        std::stringstream fields(stripped);
        std::string field;
        while (std::getline(fields, field, ',')) {
            names.push_back(detail::trim(field));
        }
        raw.push_back(std::move(names));
    }
    return validate_profile(raw);
}

inline Profile parse_profile(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

inline Profile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open profile file: " + path);
    return parse_profile(in);
}

inline void write_profile(const Profile& profile, std::ostream& out) {
    for (const auto& ranking : profile.rankings) {
        for (int r = 0; r < ranking.size(); ++r) {
            if (r > 0) out << ',';
            out << profile.name_of(ranking.order[r]);
        }
        out << '\n';
    }
}

inline std::string serialize_profile(const Profile& profile) {
    std::ostringstream out;
    write_profile(profile, out);
    return out.str();
}

inline void save_profile(const Profile& profile, const std::string& path,
                         const std::string& header_comment = {}) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write profile file: " + path);
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    write_profile(profile, out);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace kemeny
