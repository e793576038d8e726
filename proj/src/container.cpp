#include "galdual/container.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace galdual {

namespace {

constexpr char kMagic[8] = {'G', 'D', 'U', 'A', 'L', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
    return v;
  }
}

class Writer {
 public:
  explicit Writer(std::ofstream& os) : os_(os) {}
  template <class T>
  void put(T v) {
    v = to_little(v);
    os_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }

 private:
  std::ofstream& os_;
};

class Reader {
 public:
  Reader(std::ifstream& is, std::string path) : is_(is), path_(std::move(path)) {}
  template <class T>
  T get() {
    T v;
    is_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is_) throw InputError(path_ + ": truncated container");
    return to_little(v);
  }

 private:
  std::ifstream& is_;
  std::string path_;
};

}  // namespace

void write_container(const std::string& path, const Container& c) {
  const ContainerHeader& h = c.header;
  if (c.fields.size() != h.field_count) throw Error("container field count does not match header");
  for (const auto& f : c.fields)
    if (f.size() != h.grid.size()) throw Error("container field size does not match grid");
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp + " for writing");
    Writer w(os);
    os.write(kMagic, 8);
    w.put(kVersion);
    w.put<std::uint32_t>(h.basis == Basis::momentum ? 0 : 1);
    w.put<std::uint32_t>(h.rep == RepKind::galilei ? 0 : 1);
    w.put(h.invariant);
    w.put(h.c);
    w.put(h.t);
    for (int a = 0; a < 3; ++a) w.put<std::int32_t>(h.grid.n[a]);
    for (int a = 0; a < 3; ++a) w.put(h.grid.h[a]);
    for (int a = 0; a < 3; ++a) w.put(h.grid.origin[a]);
    w.put(h.field_count);
    for (const auto& f : c.fields)
      for (const cplx& z : f) {
        w.put(z.real());
        w.put(z.imag());
      }
    if (!os) throw IoError("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

Container read_container(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) throw InputError(path + ": not a grid container");
  Reader r(is, path);
  if (r.get<std::uint32_t>() != kVersion) throw InputError(path + ": unsupported container version");
  Container c;
  ContainerHeader& h = c.header;
  const auto basis = r.get<std::uint32_t>();
  const auto rep = r.get<std::uint32_t>();
  if (basis > 1 || rep > 1) throw InputError(path + ": bad basis or representation tag");
  h.basis = basis == 0 ? Basis::momentum : Basis::position;
  h.rep = rep == 0 ? RepKind::galilei : RepKind::dual;
  h.invariant = r.get<double>();
  h.c = r.get<double>();
  h.t = r.get<double>();
  for (int a = 0; a < 3; ++a) h.grid.n[a] = r.get<std::int32_t>();
  for (int a = 0; a < 3; ++a) h.grid.h[a] = r.get<double>();
  for (int a = 0; a < 3; ++a) h.grid.origin[a] = r.get<double>();
  h.field_count = r.get<std::uint32_t>();
  for (int a = 0; a < 3; ++a)
    if (h.grid.n[a] <= 0 || h.grid.n[a] > 4096 || !(h.grid.h[a] > 0))
      throw InputError(path + ": bad grid dimensions");
  if (h.field_count > 64) throw InputError(path + ": implausible field count");
  c.fields.assign(h.field_count, ComplexField(h.grid.size()));
  for (auto& f : c.fields)
    for (auto& z : f) {
      const double re = r.get<double>();
      const double im = r.get<double>();
      z = cplx(re, im);
    }
  return c;
}

void write_wavefunction(const std::string& path, const WaveFunction& w) {
  Container c;
  c.header = {w.basis, w.rep, w.invariant, w.c, w.t, w.grid, 1};
  c.fields = {w.samples};
  write_container(path, c);
}

WaveFunction read_wavefunction(const std::string& path) {
  Container c = read_container(path);
  if (c.header.field_count != 1) throw InputError(path + ": expected a single wavefunction field");
  const ContainerHeader& h = c.header;
  if (h.basis == Basis::position)
    return make_position_state(h.rep, h.invariant, h.grid, std::move(c.fields[0]), h.c, h.t);
  WaveFunction w = make_momentum_state(h.rep, h.invariant, h.grid, std::move(c.fields[0]), h.c);
  w.t = h.t;
  return w;
}

Container pack_real_fields(const Grid3& g, const std::vector<const RealField*>& fields) {
  Container c;
  c.header.grid = g;
  c.header.field_count = std::uint32_t(fields.size());
  for (const RealField* f : fields) c.fields.emplace_back(f->begin(), f->end());
  return c;
}

}  // namespace galdual
