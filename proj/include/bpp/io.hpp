#ifndef BPP_IO_HPP
#define BPP_IO_HPP

#include <string>

#include "bpp/box.hpp"

namespace bpp {

// Text format: first line "a b c", then a rows of b space-separated entries.
// Writers emit the canonical form; parse(write(p)) round-trips byte-exactly.
std::string write_text(const PlanePartition& p);
PlanePartition parse_text(const std::string& text);

// JSON form: {"a":...,"b":...,"c":...,"z":[[...],...]} in compact canonical
// serialization (sorted keys, no whitespace).
std::string write_json(const PlanePartition& p);
PlanePartition parse_json(const std::string& text);

}  // namespace bpp

#endif
