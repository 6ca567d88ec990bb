// Writes the parametric certificate files for the classical families.

#include "sphorb/cert_families.hpp"
#include "sphorb/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write(const std::filesystem::path &path, const std::vector<sphorb::ExclusionCert> &certs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "[\n";
  for (std::size_t k = 0; k < certs.size(); ++k)
    out << "  " << sphorb::to_json(certs[k]).dump() << (k + 1 < certs.size() ? ",\n" : "\n");
  out << "]\n";
  std::cout << path.string() << ": " << certs.size() << " certificates\n";
}

template <class F> std::vector<sphorb::ExclusionCert> collect(F gen, std::initializer_list<int> ranks) {
  std::vector<sphorb::ExclusionCert> all;
  for (int n : ranks) {
    auto part = gen(n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"generate classical-family certificate files"};
  std::string dir = "certs";
  app.add_option("outdir", dir, "output directory");
  CLI11_PARSE(app, argc, argv);

  namespace fam = sphorb::families;
  try {
    const std::filesystem::path d(dir);
    write(d / "a.certs.json", collect(fam::type_a, {2, 3, 4, 5, 6, 7, 8}));
    write(d / "b.certs.json", collect(fam::type_b, {2, 3, 4, 5, 6, 7, 8}));
    write(d / "c.certs.json", collect(fam::type_c, {3, 4, 5, 6, 7, 8}));
    write(d / "d.certs.json", collect(fam::type_d_odd, {5, 7}));
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
