// io.hpp -- deterministic serialization of the library's value types.
//
// All floating-point output goes through a single %.17g formatter so that
// identical inputs produce byte-identical files.  JSON parsing accepts any
// spacing; JSON emission is compact and key-ordered.
#pragma once

#include "gaborforge/equivalence.hpp"
#include "gaborforge/frame_engine.hpp"
#include "gaborforge/lattice.hpp"
#include "gaborforge/tf_core.hpp"
#include "gaborforge/types.hpp"

#include <string>

namespace gf {

// {"n":..,"family":"..","params":{..},"entries":[[re,im],..]}
std::string sequence_to_json(const Sequence& phi);
Sequence sequence_from_json(const std::string& text);

// {"n":..,"elements":[[k,l],..]} with elements in lexicographic order.
std::string subgroup_to_json(const TFSubgroup& lambda);
TFSubgroup subgroup_from_json(const std::string& text);

// {"n":..,"values":[[[re,im],..],..]} with values[m][n].
std::string dpaf_to_json(const DPAFMatrix& a);

// Magnitude table: row m on line m, N comma-separated |values[m][n]|,
// '.' decimal separator, 17 significant digits.
std::string dpaf_magnitude_csv(const DPAFMatrix& a);

// {"method":"..","is_frame":..,"is_tight":..,"frame_bound":..,
//  "witnesses":[[m,n,re,im],..],"gram_rank":int|null,"bounds":[A,B]|null}
std::string tightness_report_to_json(const TightnessReport& report);

// |Lambda| x |Lambda| table of 0/1 entries: 1 where |G_ij| > threshold.
std::string gram_support_csv(const GramMatrix& gram, double threshold);

// {"n":..,"z":[[re,im],..]}
std::string cyclic_root_to_json(const CyclicRoot& root);
CyclicRoot cyclic_root_from_json(const std::string& text);

// Whole-file helpers; read errors and malformed content surface as
// std::invalid_argument naming the path or the offending field.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// The shared float formatter (17 significant digits, shortest-form %g).
std::string format_double(double x);

}  // namespace gf
