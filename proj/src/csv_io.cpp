#include "pcetd/csv_io.hpp"

#include "pcetd/errors.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pcetd {

int system_id(ModelKind kind) {
  switch (kind) {
  case ModelKind::Linear: return 6;
  case ModelKind::Quadratic: return 7;
  case ModelKind::Cubic: return 8;
  case ModelKind::GrayScott: return 0;
  }
  return -1;
}

std::string discretization_tag(SchemeKind scheme) {
  switch (scheme) {
  case SchemeKind::ExplicitEuler: return "FD_EE";
  case SchemeKind::EtdRdp: return "FD_ETDRDP";
  case SchemeKind::Etdrk4: return "Spectral";
  }
  return "?";
}

namespace {

std::string format_d(double D) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", D);
  return buf;
}

std::string format17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

std::string error_array_filename(bool intrusive, SchemeKind scheme,
                                 StatKind stat, ModelKind model, double D,
                                 int dim) {
  const std::string disc = discretization_tag(scheme);
  const std::string dimtag = dim == 2 ? "_2D" : "";
  const std::string tail = "system=" + std::to_string(system_id(model)) +
                           "_D=" + format_d(D) + ".txt";
  if (intrusive)
    return "errorarray_" + disc + dimtag + "_" + to_string(stat) + "_" + tail;
  return "errorarray_" + std::string(to_string(stat)) + "_Nonintrusive_" +
         disc + dimtag + "_" + tail;
}

std::string performance_filename(ModelKind model, double D) {
  return "Performanceplot_mean_system=" + std::to_string(system_id(model)) +
         "_D=" + format_d(D) + ".txt";
}

std::string runtime_filename(SchemeKind scheme) {
  switch (scheme) {
  case SchemeKind::ExplicitEuler: return "runtimearray_EE.txt";
  case SchemeKind::EtdRdp: return "runtimearray_ETDRDP.txt";
  case SchemeKind::Etdrk4: return "runtimearray_ETDRK4.txt";
  }
  return "runtimearray.txt";
}

// --- SHA-1 (for provenance hashes, not security) -------------------------------

namespace {

struct Sha1 {
  std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                        0xC3D2E1F0u};

  static std::uint32_t rol(std::uint32_t v, int s) {
    return (v << s) | (v >> (32 - s));
  }

  void block(const unsigned char* p) {
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i)
      w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
             (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 80; ++i)
      w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | (~b & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t tmp = rol(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rol(b, 30);
      b = a;
      a = tmp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }

  std::string digest(const std::string& data) {
    std::string msg = data;
    const std::uint64_t bits = static_cast<std::uint64_t>(data.size()) * 8;
    msg.push_back(static_cast<char>(0x80));
    while (msg.size() % 64 != 56) msg.push_back('\0');
    for (int i = 7; i >= 0; --i)
      msg.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
    for (std::size_t off = 0; off < msg.size(); off += 64)
      block(reinterpret_cast<const unsigned char*>(msg.data()) + off);
    char out[41];
    std::snprintf(out, sizeof(out), "%08x%08x%08x%08x%08x", h[0], h[1], h[2],
                  h[3], h[4]);
    return out;
  }
};

void atomic_write(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw NumericalFailure("emit_csv: cannot open " + tmp, 0.0);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw NumericalFailure("emit_csv: write failed for " + tmp, 0.0);
  }
  std::filesystem::rename(tmp, path);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_sidecar(const std::string& csv_path, const std::string& content,
                   const std::map<std::string, std::string>& config,
                   const std::vector<ErrorSeries>* series) {
  std::ostringstream os;
  os << "{\n  \"content_sha1\": \"" << git_blob_sha1(content) << "\",\n";
  os << "  \"config\": {";
  bool first = true;
  for (const auto& [k, v] : config) {
    os << (first ? "" : ", ") << "\"" << json_escape(k) << "\": \""
       << json_escape(v) << "\"";
    first = false;
  }
  os << "}";
  if (series) {
    os << ",\n  \"series\": [";
    for (std::size_t s = 0; s < series->size(); ++s) {
      os << (s ? ", " : "") << "{\"label\": \""
         << json_escape((*series)[s].label) << "\"";
      for (const auto& [k, v] : (*series)[s].meta)
        os << ", \"" << json_escape(k) << "\": \"" << json_escape(v) << "\"";
      os << "}";
    }
    os << "]";
  }
  os << "\n}\n";
  atomic_write(csv_path + ".meta.json", os.str());
}

} // namespace

std::string git_blob_sha1(const std::string& bytes) {
  std::string blob = "blob " + std::to_string(bytes.size());
  blob.push_back('\0');
  blob += bytes;
  Sha1 sha;
  return sha.digest(blob);
}

std::string emit_csv(const std::vector<ErrorSeries>& series,
                     const std::string& directory, const std::string& filename,
                     const std::map<std::string, std::string>& config) {
  if (series.empty())
    throw InvalidArgument("emit_csv: empty series set");
  for (const auto& s : series)
    if (s.times != series[0].times)
      throw InvalidArgument("emit_csv: series abscissae differ");

  std::ostringstream os;
  os << "t";
  for (const auto& s : series) os << "," << s.label;
  os << "\n";
  for (std::size_t r = 0; r < series[0].times.size(); ++r) {
    os << format17(series[0].times[r]);
    for (const auto& s : series) os << "," << format17(s.errors[r]);
    os << "\n";
  }
  const std::string content = os.str();

  std::filesystem::create_directories(directory);
  const std::string path = directory + "/" + filename;
  atomic_write(path, content);
  write_sidecar(path, content, config, &series);
  return path;
}

CsvTable parse_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("parse_csv: cannot open " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(f, line))
    throw InvalidArgument("parse_csv: empty file " + path);
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  table.columns.resize(table.header.size());
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::size_t col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col >= table.columns.size())
        throw InvalidArgument("parse_csv: ragged row in " + path);
      table.columns[col++].push_back(std::strtod(cell.c_str(), nullptr));
    }
  }
  return table;
}

std::string emit_matrix_csv(const std::vector<double>& field, int rows,
                            int cols, const std::string& directory,
                            const std::string& filename,
                            const std::map<std::string, std::string>& config) {
  if (field.size() != static_cast<std::size_t>(rows) * cols)
    throw InvalidArgument("emit_matrix_csv: shape mismatch");
  std::ostringstream os;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c)
      os << (c ? "," : "") << format17(field[static_cast<std::size_t>(r) * cols + c]);
    os << "\n";
  }
  const std::string content = os.str();
  std::filesystem::create_directories(directory);
  const std::string path = directory + "/" + filename;
  atomic_write(path, content);
  write_sidecar(path, content, config, nullptr);
  return path;
}

} // namespace pcetd
