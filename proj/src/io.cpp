#include "chevmor/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace chevmor {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw ParseError(std::string(what) + ": trailing characters in '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(std::string(what) + ": bad integer '" + s + "'");
  }
}

int64_t parse_i64(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError(std::string(what) + ": trailing characters in '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(std::string(what) + ": bad integer '" + s + "'");
  }
}

// key=value field out of a header token
std::string expect_kv(const std::string& token, const std::string& key) {
  auto eq = token.find('=');
  if (eq == std::string::npos || token.substr(0, eq) != key)
    throw ParseError("expected '" + key + "=...' but found '" + token + "'");
  return token.substr(eq + 1);
}

}  // namespace

std::string element_to_text(const Field& F, const FieldElement& v) {
  std::string s;
  for (uint32_t i = 0; i < F.degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.c[i]);
  }
  return s;
}

FieldElement element_from_text(const Field& F, const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != F.degree()) throw ParseError("field element needs k coefficients: '" + s + "'");
  FieldElement v;
  for (uint32_t i = 0; i < F.degree(); ++i) {
    uint64_t c = parse_u64(parts[i], "field element coefficient");
    if (c >= F.characteristic()) throw ParseError("coefficient out of range in '" + s + "'");
    v.c[i] = uint32_t(c);
  }
  return v;
}

std::string group_to_text(const GroupId& G) {
  std::string mod;
  for (size_t i = 0; i < G.field.modulus().size(); ++i) {
    if (i) mod += ',';
    mod += std::to_string(G.field.modulus()[i]);
  }
  return "family=" + std::string(1, char(G.family)) + " l=" + std::to_string(G.rank) +
         " p=" + std::to_string(G.field.characteristic()) + " k=" + std::to_string(G.field.degree()) +
         " mod=" + mod;
}

GroupId group_from_text(const std::string& line) {
  std::istringstream ss(line);
  std::string tok;
  std::vector<std::string> toks;
  while (ss >> tok) toks.push_back(tok);
  if (toks.size() != 5) throw ParseError("group header needs 5 fields: '" + line + "'");
  std::string fam = expect_kv(toks[0], "family");
  if (fam.size() != 1 || (fam[0] != 'A' && fam[0] != 'B' && fam[0] != 'C' && fam[0] != 'D'))
    throw ParseError("unknown family '" + fam + "'");
  int l = int(parse_u64(expect_kv(toks[1], "l"), "rank"));
  if (l < 2) throw ParseError("rank must be at least 2");
  uint32_t p = uint32_t(parse_u64(expect_kv(toks[2], "p"), "characteristic"));
  uint32_t k = uint32_t(parse_u64(expect_kv(toks[3], "k"), "degree"));
  auto mod_parts = split(expect_kv(toks[4], "mod"), ',');
  std::vector<uint32_t> mod;
  for (const auto& part : mod_parts) mod.push_back(uint32_t(parse_u64(part, "modulus coefficient")));
  return GroupId{Family(fam[0]), l, Field(p, k, mod)};
}

std::string label_to_text(const GroupId& G, const GenLabel& lab) {
  const Field& F = G.field;
  switch (lab.kind) {
    case GenKind::XPlain:
      return "XP " + std::to_string(lab.i) + " " + std::to_string(lab.j) + " t=" + element_to_text(F, lab.t);
    case GenKind::XUpper:
      return "XU " + std::to_string(lab.i) + " " + std::to_string(lab.j) + " t=" + element_to_text(F, lab.t);
    case GenKind::XLower:
      return "XL " + std::to_string(lab.i) + " " + std::to_string(lab.j) + " t=" + element_to_text(F, lab.t);
    case GenKind::XShortU:
      return "XSU " + std::to_string(lab.i) + " t=" + element_to_text(F, lab.t);
    case GenKind::XShortL:
      return "XSL " + std::to_string(lab.i) + " t=" + element_to_text(F, lab.t);
    case GenKind::XB0Up:
      return "XB0U " + std::to_string(lab.i) + " t=" + element_to_text(F, lab.t);
    case GenKind::XB0Lo:
      return "XB0L " + std::to_string(lab.i) + " t=" + element_to_text(F, lab.t);
    case GenKind::DZ:
      return "DZ e=" + std::to_string(lab.e);
    case GenKind::WL:
      return "WL";
  }
  throw Error("label_to_text: unknown kind");
}

GenLabel label_from_text(const GroupId& G, const std::string& line) {
  std::istringstream ss(line);
  std::string tag;
  ss >> tag;
  GenLabel lab;
  auto read_indices = [&](bool two) {
    std::string a, b;
    ss >> a;
    lab.i = int(parse_u64(a, "label index"));
    if (two) {
      ss >> b;
      lab.j = int(parse_u64(b, "label index"));
    }
  };
  auto read_param = [&]() {
    std::string t;
    ss >> t;
    lab.t = element_from_text(G.field, expect_kv(t, "t"));
  };
  if (tag == "XP" || tag == "XU" || tag == "XL") {
    lab.kind = tag == "XP" ? GenKind::XPlain : tag == "XU" ? GenKind::XUpper : GenKind::XLower;
    read_indices(true);
    read_param();
  } else if (tag == "XSU" || tag == "XSL" || tag == "XB0U" || tag == "XB0L") {
    lab.kind = tag == "XSU"    ? GenKind::XShortU
               : tag == "XSL"  ? GenKind::XShortL
               : tag == "XB0U" ? GenKind::XB0Up
                               : GenKind::XB0Lo;
    read_indices(false);
    read_param();
  } else if (tag == "DZ") {
    lab.kind = GenKind::DZ;
    std::string e;
    ss >> e;
    lab.e = parse_i64(expect_kv(e, "e"), "DZ exponent");
  } else if (tag == "WL") {
    lab.kind = GenKind::WL;
  } else {
    throw ParseError("unknown label tag '" + tag + "'");
  }
  validate_label(G, lab);
  return lab;
}

LineReader::LineReader(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    lines_.push_back(line);
  }
}

std::string LineReader::next() {
  while (pos_ < lines_.size()) {
    const std::string& l = lines_[pos_++];
    if (!l.empty()) return l;
  }
  throw ParseError("unexpected end of input");
}

bool LineReader::done() const {
  for (size_t i = pos_; i < lines_.size(); ++i)
    if (!lines_[i].empty()) return false;
  return true;
}

void write_matrix(std::ostream& os, const Field& F, const Matrix& M) {
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) {
      if (c) os << ' ';
      os << element_to_text(F, M.at(r, c));
    }
    os << '\n';
  }
}

Matrix read_matrix(LineReader& r, const Field& F, int rows, int cols) {
  Matrix M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::istringstream ss(r.next());
    std::string tok;
    for (int j = 0; j < cols; ++j) {
      if (!(ss >> tok)) throw ParseError("matrix row too short");
      M.at(i, j) = element_from_text(F, tok);
    }
    if (ss >> tok) throw ParseError("matrix row too long");
  }
  return M;
}

void write_word(std::ostream& os, const GroupId& G, const Word& w) {
  for (const GenLabel& lab : w) os << label_to_text(G, lab) << '\n';
}

Word read_word(std::istream& in, const GroupId& G) {
  LineReader r(in);
  Word w;
  while (!r.done()) w.push_back(label_from_text(G, r.next()));
  return w;
}

void write_autorep(std::ostream& os, const AutoRep& rep) {
  os << group_to_text(rep.group) << '\n';
  for (const Matrix& img : rep.images) {
    write_matrix(os, rep.group.field, img);
    os << '\n';
  }
}

AutoRep read_autorep(LineReader& r) {
  GroupId G = group_from_text(r.next());
  size_t n = enumerate_generators(G).size();
  AutoRep rep{G, {}};
  int d = G.dim();
  for (size_t i = 0; i < n; ++i) rep.images.push_back(read_matrix(r, G.field, d, d));
  return rep;
}

void write_public_key(std::ostream& os, const PublicKey& pk) {
  os << "MOR1\n" << group_to_text(pk.group) << '\n' << "role=public\n";
  write_autorep(os, pk.phi);
  write_autorep(os, pk.phi_m);
}

PublicKey read_public_key(std::istream& in) {
  LineReader r(in);
  if (r.next() != "MOR1") throw ParseError("missing MOR1 magic");
  GroupId G = group_from_text(r.next());
  if (r.next() != "role=public") throw ParseError("expected role=public");
  AutoRep phi = read_autorep(r);
  AutoRep phi_m = read_autorep(r);
  if (!(phi.group == G) || !(phi_m.group == G)) throw ParseError("group mismatch inside public key");
  return PublicKey{G, std::move(phi), std::move(phi_m)};
}

void write_private_key(std::ostream& os, const PrivateKey& sk) {
  os << "MOR1\n" << group_to_text(sk.group) << '\n' << "role=private\n" << "m=" << sk.m << '\n';
}

PrivateKey read_private_key(std::istream& in) {
  LineReader r(in);
  if (r.next() != "MOR1") throw ParseError("missing MOR1 magic");
  GroupId G = group_from_text(r.next());
  if (r.next() != "role=private") throw ParseError("expected role=private");
  uint64_t m = parse_u64(expect_kv(r.next(), "m"), "private exponent");
  return PrivateKey{G, m, Matrix{}};
}

void write_ciphertext(std::ostream& os, const Ciphertext& ct) {
  write_autorep(os, ct.phi_r);
  write_matrix(os, ct.phi_r.group.field, ct.payload);
}

Ciphertext read_ciphertext(std::istream& in) {
  LineReader r(in);
  AutoRep phi_r = read_autorep(r);
  int d = phi_r.group.dim();
  Matrix payload = read_matrix(r, phi_r.group.field, d, d);
  return Ciphertext{std::move(phi_r), std::move(payload)};
}

}  // namespace chevmor
