#include "boole/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace boole {

unsigned default_thread_count() {
    if (const char* env = std::getenv("BOOLE_KERNEL_THREADS")) {
        std::string_view s(env);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace boole
