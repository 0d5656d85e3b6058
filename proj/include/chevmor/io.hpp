#pragma once

#include <iosfwd>
#include <string>

#include "chevmor/mor.hpp"

namespace chevmor {

/// Text formats.  Field element: `c0,c1,...,c(k-1)` (base-p coefficients,
/// low degree first).  Matrix: one row per line, entries space separated.
/// Group header: `family=<A|B|C|D> l=<int> p=<int> k=<int> mod=<coeffs>`.
/// Word: one label per line, e.g. `XU 1 3 t=2,0`, `DZ e=3`, `WL`.

std::string element_to_text(const Field& F, const FieldElement& v);
FieldElement element_from_text(const Field& F, const std::string& s);

std::string group_to_text(const GroupId& G);
GroupId group_from_text(const std::string& line);

std::string label_to_text(const GroupId& G, const GenLabel& lab);
GenLabel label_from_text(const GroupId& G, const std::string& line);

/// Pull-based reader over the non-blank lines of a stream.
class LineReader {
 public:
  explicit LineReader(std::istream& in);
  std::string next();
  bool done() const;

 private:
  std::vector<std::string> lines_;
  size_t pos_ = 0;
};

void write_matrix(std::ostream& os, const Field& F, const Matrix& M);
Matrix read_matrix(LineReader& r, const Field& F, int rows, int cols);

void write_word(std::ostream& os, const GroupId& G, const Word& w);
Word read_word(std::istream& in, const GroupId& G);

void write_autorep(std::ostream& os, const AutoRep& rep);
AutoRep read_autorep(LineReader& r);

void write_public_key(std::ostream& os, const PublicKey& pk);
PublicKey read_public_key(std::istream& in);

void write_private_key(std::ostream& os, const PrivateKey& sk);
PrivateKey read_private_key(std::istream& in);

void write_ciphertext(std::ostream& os, const Ciphertext& ct);
Ciphertext read_ciphertext(std::istream& in);

}  // namespace chevmor
