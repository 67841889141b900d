#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgm/gf2.hpp"
#include "sgm/graph.hpp"
#include "sgm/matroid.hpp"
#include "sgm/signed_graph.hpp"

namespace sgm {

// Matrix files:
//   #labels e1 e2 ...      (optional)
//   <rows> <cols>
//   0110...                (one line per row)
//
// Graph files, one edge per line, each optionally prefixed by "<label>:":
//   link u v | loop v | half v | loose
// An optional "#vertices v1 v2 ..." line fixes vertex order; other lines
// starting with '#' and blank lines are ignored. Signed graph files append
// "+" or "-" to an edge line; a missing sign defaults to "-" on half edges
// and "+" everywhere else.

struct LabeledMatrix {
  std::vector<std::string> labels;  // e1..en when the file names none
  Gf2Matrix matrix;
};

[[nodiscard]] LabeledMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const LabeledMatrix& m);

[[nodiscard]] BinaryMatroid read_matroid(std::istream& in);
/// Writes the reduced representation with its labels.
void write_matroid(std::ostream& out, const BinaryMatroid& m);

[[nodiscard]] Multigraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Multigraph& g);

[[nodiscard]] SignedGraph read_signed_graph(std::istream& in);
void write_signed_graph(std::ostream& out, const SignedGraph& s);

[[nodiscard]] LabeledMatrix read_matrix_file(const std::string& path);
[[nodiscard]] Multigraph read_graph_file(const std::string& path);
[[nodiscard]] SignedGraph read_signed_graph_file(const std::string& path);

}  // namespace sgm
