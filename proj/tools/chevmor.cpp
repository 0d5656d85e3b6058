// Command-line front end: key generation, encryption, decryption, the word
// problem, word verification, conjugator recovery and decomposition
// benchmarks, all against text files.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chevmor/io.hpp"

namespace {

using namespace chevmor;

struct GroupFlags {
  std::string family = "C";
  int rank = 2;
  uint32_t p = 3;
  uint32_t k = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "group family: A, B, C or D")
        ->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd->add_option("--rank", rank, "rank l (>= 2)")->check(CLI::Range(2, 64));
    cmd->add_option("--char", p, "field characteristic, an odd prime");
    cmd->add_option("--deg", k, "field extension degree")->check(CLI::Range(1u, kMaxDegree));
  }

  GroupId group() const { return GroupId{Family(family[0]), rank, Field(p, k)}; }
};

std::vector<uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
}

template <typename Fn>
void write_text(const std::string& path, Fn&& fn) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  fn(out);
}

std::ifstream open_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

int run(int argc, char** argv) {
  CLI::App app{"MOR cryptosystem over classical Chevalley groups"};
  app.require_subcommand(1);

  GroupFlags kg_flags, word_flags, verify_flags, bench_flags;
  uint64_t seed = 1;
  std::string in_path, out_path, pub_path, priv_path;

  // keygen
  auto* kg = app.add_subcommand("keygen", "generate a key pair");
  kg_flags.attach(kg);
  kg->add_option("--seed", seed, "rng seed")->required();
  kg->add_option("--out-public", pub_path, "public key file")->required();
  kg->add_option("--out-private", priv_path, "private key file")->required();
  uint64_t force_m = 0;
  kg->add_option("--force-m", force_m, "test hook: fix the private exponent");

  // encrypt
  auto* enc = app.add_subcommand("encrypt", "encrypt a byte payload");
  enc->add_option("--public", pub_path, "public key file")->required();
  enc->add_option("--in", in_path, "plaintext bytes")->required();
  enc->add_option("--out", out_path, "ciphertext file")->required();
  enc->add_option("--seed", seed, "rng seed")->required();
  uint64_t force_r = 0;
  enc->add_option("--force-r", force_r, "test hook: fix the ephemeral exponent");

  // decrypt
  auto* dec = app.add_subcommand("decrypt", "decrypt a ciphertext file");
  dec->add_option("--private", priv_path, "private key file")->required();
  dec->add_option("--in", in_path, "ciphertext file")->required();
  dec->add_option("--out", out_path, "plaintext bytes")->required();

  // word
  auto* word = app.add_subcommand("word", "decompose a member matrix into generators");
  word_flags.attach(word);
  word->add_option("--in", in_path, "matrix file")->required();
  word->add_option("--out", out_path, "word file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "evaluate a word file and check membership");
  verify_flags.attach(verify);
  verify->add_option("--in", in_path, "word file")->required();
  verify->add_option("--out", out_path, "matrix file (optional)");

  // attack
  auto* atk = app.add_subcommand("attack", "recover the conjugator from a public key");
  atk->add_option("--public", pub_path, "public key file")->required();
  atk->add_option("--out", out_path, "recovered conjugator matrix file");
  std::string method = "auto";
  atk->add_option("--method", method, "fast, linear or auto")
      ->check(CLI::IsMember({"fast", "linear", "auto"}));

  // bench
  auto* bench = app.add_subcommand("bench", "decomposition cost over a rank sweep");
  bench_flags.attach(bench);
  std::string ranks = "4,8,16";
  int samples = 5;
  bench->add_option("--ranks", ranks, "comma separated ranks");
  bench->add_option("--samples", samples, "random members per rank");
  bench->add_option("--seed", seed, "rng seed");

  CLI11_PARSE(app, argc, argv);

  if (kg->parsed()) {
    GroupId G = kg_flags.group();
    Rng rng(seed);
    KeygenOptions opts;
    if (force_m) opts.force_m = force_m;
    auto [pk, sk] = keygen(G, rng, opts);
    write_text(pub_path, [&](std::ostream& os) { write_public_key(os, pk); });
    write_text(priv_path, [&](std::ostream& os) { write_private_key(os, sk); });
    std::cout << "wrote " << pub_path << " and " << priv_path << "\n";
    return 0;
  }

  if (enc->parsed()) {
    auto in = open_text(pub_path);
    PublicKey pk = read_public_key(in);
    std::vector<uint8_t> data = read_bytes(in_path);
    Matrix msg = encode_bytes(pk.group, data);
    Rng rng(seed);
    Ciphertext ct = encrypt(pk, msg, rng, force_r ? std::optional<uint64_t>(force_r) : std::nullopt);
    write_text(out_path, [&](std::ostream& os) { write_ciphertext(os, ct); });
    std::cout << "wrote " << out_path << "\n";
    return 0;
  }

  if (dec->parsed()) {
    auto kin = open_text(priv_path);
    PrivateKey sk = read_private_key(kin);
    auto cin_ = open_text(in_path);
    Ciphertext ct = read_ciphertext(cin_);
    Matrix msg = decrypt(sk, ct);
    write_bytes(out_path, decode_bytes(sk.group, msg));
    std::cout << "wrote " << out_path << "\n";
    return 0;
  }

  if (word->parsed()) {
    GroupId G = word_flags.group();
    auto in = open_text(in_path);
    LineReader r(in);
    Matrix g = read_matrix(r, G.field, G.dim(), G.dim());
    auto [w, ctr] = decompose(G, g);
    write_text(out_path, [&](std::ostream& os) { write_word(os, G, w); });
    std::cout << "mults=" << ctr.mults << " adds=" << ctr.adds << " labels=" << ctr.labels << "\n";
    return 0;
  }

  if (verify->parsed()) {
    GroupId G = verify_flags.group();
    auto in = open_text(in_path);
    Word w = read_word(in, G);
    Matrix m = word_eval(G, w);
    if (!out_path.empty())
      write_text(out_path, [&](std::ostream& os) { write_matrix(os, G.field, m); });
    else
      write_matrix(std::cout, G.field, m);
    std::cout << "member=" << (is_member(G, m) ? "true" : "false") << "\n";
    return 0;
  }

  if (atk->parsed()) {
    auto in = open_text(pub_path);
    PublicKey pk = read_public_key(in);
    bool can_fast = pk.group.family == Family::A || pk.group.family == Family::C;
    Matrix ghat;
    if (method == "fast" || (method == "auto" && can_fast))
      ghat = recover_conjugator_fast(pk.phi);
    else
      ghat = recover_conjugator_linear(pk.phi);
    bool ok = same_images(auto_from_conjugation(pk.group, ghat), pk.phi);
    if (!out_path.empty())
      write_text(out_path, [&](std::ostream& os) { write_matrix(os, pk.group.field, ghat); });
    else
      write_matrix(std::cout, pk.group.field, ghat);
    std::cout << "verified=" << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 2;
  }

  if (bench->parsed()) {
    std::vector<int> ls;
    std::stringstream ss(ranks);
    std::string tok;
    while (std::getline(ss, tok, ',')) ls.push_back(std::stoi(tok));
    std::vector<double> logl, logm;
    for (int l : ls) {
      GroupId G{Family(bench_flags.family[0]), l, Field(bench_flags.p, bench_flags.k)};
      Rng rng(seed + uint64_t(l));
      uint64_t total_mults = 0, total_adds = 0, total_labels = 0;
      for (int s = 0; s < samples; ++s) {
        Matrix g = random_element(G, rng);
        auto [w, ctr] = decompose(G, g);
        if (!(word_eval(G, w) == g)) throw Error("bench: decomposition failed to reproduce input");
        total_mults += ctr.mults;
        total_adds += ctr.adds;
        total_labels += ctr.labels;
      }
      double avg = double(total_mults) / samples;
      std::cout << "l=" << l << " d=" << G.dim() << " samples=" << samples << " mults=" << uint64_t(avg)
                << " adds=" << total_adds / samples << " labels=" << total_labels / samples << "\n";
      logl.push_back(std::log(double(l)));
      logm.push_back(std::log(avg));
    }
    if (ls.size() >= 2) {
      double n = double(ls.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < ls.size(); ++i) {
        sx += logl[i];
        sy += logm[i];
        sxx += logl[i] * logl[i];
        sxy += logl[i] * logm[i];
      }
      double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      std::cout << "slope=" << slope << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
