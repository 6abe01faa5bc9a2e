#include "lts/hashchain.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include "lts/kary.hpp"
#include "lts/worstcase.hpp"

namespace lts {

Bytes toy_hash(const Bytes& in) {
  std::uint64_t x = 0xcbf29ce484222325ULL;
  for (unsigned char ch : in) {
    x ^= ch;
    x *= 0x100000001b3ULL;
  }
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  Bytes out(8, '\0');
  for (int i = 7; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<char>(x & 0xff);
    x >>= 8;
  }
  return out;
}

Bytes sha256(const Bytes& in) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(in.data(), in.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  return Bytes(reinterpret_cast<const char*>(md), len);
}

HashFn hash_by_name(const std::string& name) {
  if (name == "toy") return toy_hash;
  if (name == "sha256") return sha256;
  throw BadRequest("unknown hash '" + name + "' (expected toy or sha256)");
}

bool verify(const Bytes& prev, const Bytes& v, const HashFn& h) { return h(prev) == v; }

std::string to_hex(const Bytes& b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (unsigned char ch : b) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

Bytes from_hex(const std::string& s) {
  if (s.size() % 2) throw BadRequest("hex string has odd length");
  auto nib = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw BadRequest(std::string("bad hex character '") + ch + "'");
  };
  Bytes out;
  for (std::size_t i = 0; i < s.size(); i += 2) out.push_back(static_cast<char>(nib(s[i]) * 16 + nib(s[i + 1])));
  return out;
}

struct Backstepper::Impl {
  Bytes seed;
  GeneratedProvider<Bytes> pv;
  std::unique_ptr<Traverser> t;
  Impl(Bytes s, HashFn h) : seed(s), pv(std::move(s), std::move(h)) {}
  ~Impl() {
    if (!seed.empty()) OPENSSL_cleanse(seed.data(), seed.size());
  }
};

Backstepper::Backstepper(Bytes seed, std::uint64_t n, HashFn h, std::uint32_t k, ChainMode mode) : n_(n) {
  if (n == 0) throw BadRequest("chain length must be at least 1");
  impl_ = std::make_unique<Impl>(std::move(seed), std::move(h));
  // a binary sparse tree is the worst-case pebbler's tree; use it for its per-step bound
  if (mode == ChainMode::Sparse && n > 1 && kary_shape_for(n, k).arity == 2) mode = ChainMode::WorstCase;
  if (mode == ChainMode::WorstCase)
    impl_->t = std::make_unique<WorstCasePebbler>(impl_->pv, n);
  else
    impl_->t = std::make_unique<KaryPebbler>(impl_->pv, n, k, mode == ChainMode::Sparse ? KaryMode::Sparse : KaryMode::Dense);
}

Backstepper::~Backstepper() = default;

std::optional<Backstepper::Item> Backstepper::next() {
  if (yielded_ == n_) return std::nullopt;
  auto& t = *impl_->t;
  auto before = impl_->pv.evaluations();
  if (yielded_ == 0) {
    while (t.position() < n_) t.forward();
  } else {
    t.back();
    worst_step_ = std::max(worst_step_, impl_->pv.evaluations() - before);
  }
  ++yielded_;
  return Item{t.position() - 1, impl_->pv.payload(t.current())};
}

std::uint64_t Backstepper::hash_evaluations() const { return impl_->pv.evaluations(); }
std::uint64_t Backstepper::stored_max() const { return impl_->pv.counters().pebbles_max; }

}  // namespace lts
