#pragma once

#include <sstream>
#include <string>

namespace trigrid {

// Trace verbosity from TRIGRID_LOG: 0 silent (default), 1 info, 2 debug.
int log_level();
void set_log_level(int level);
void log_line(int level, const std::string& msg);

} // namespace trigrid

#define TRIGRID_LOG(level, expr)                                 \
    do {                                                         \
        if (::trigrid::log_level() >= (level)) {                 \
            std::ostringstream trigrid_log_os_;                  \
            trigrid_log_os_ << expr;                             \
            ::trigrid::log_line((level), trigrid_log_os_.str()); \
        }                                                        \
    } while (0)
