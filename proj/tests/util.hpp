#ifndef COXREP_TESTS_UTIL_HPP
#define COXREP_TESTS_UTIL_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "coxrep/errors.hpp"

inline std::string fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

template <class F>
coxrep::ErrorCode thrown_code(F&& f) {
    try {
        f();
    } catch (const coxrep::Error& e) {
        return e.code();
    }
    throw std::runtime_error("expected a coxrep::Error");
}

#endif
