#include "error.hpp"

namespace freefall {

const char* errc_name(errc c) {
    switch (c) {
        case errc::lex: return "lex";
        case errc::parse: return "parse";
        case errc::eval: return "eval";
        case errc::domain: return "domain";
        case errc::signature: return "signature";
        case errc::singular: return "singular";
        case errc::range: return "range";
        case errc::pole: return "pole";
        case errc::precondition: return "precondition";
        case errc::convergence: return "convergence";
        case errc::property: return "property";
    }
    return "unknown";
}

} // namespace freefall
