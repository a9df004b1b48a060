#include "trigrid/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace trigrid {

namespace {

int level_from_env() {
    const char* v = std::getenv("TRIGRID_LOG");
    if (!v || !*v) return 0;
    std::string_view s(v);
    if (s == "debug" || s == "trace") return 2;
    if (s == "info") return 1;
    if (s == "off") return 0;
    return std::atoi(v);
}

int& current_level() {
    static int level = level_from_env();
    return level;
}

} // namespace

int log_level() { return current_level(); }

void set_log_level(int level) { current_level() = level; }

void log_line(int level, const std::string& msg) {
    std::cerr << (level >= 2 ? "[debug] " : "[info] ") << msg << '\n';
}

} // namespace trigrid
