// Copyright 2026 The Slow Space Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Operator entry point: serve, new, validate, export, replay, fuzz.
//
// Exit codes: 0 ok, 1 validation or convergence failure, 2 usage, 3 I/O.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "slowspace/fuzz/convergence.h"
#include "slowspace/materializer/scene_description.h"
#include "slowspace/scene/canonical.h"
#include "slowspace/server/http_server.h"
#include "slowspace/server/op_log.h"
#include "slowspace/server/store.h"
#include "slowspace/util/file_io.h"

namespace {

namespace fs = std::filesystem;
using namespace slowspace;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string EnvOr(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? std::string(v) : std::move(fallback);
}

int ReportStoreError(const server::StoreError& e) {
  std::cerr << "error: " << server::StoreErrorName(e.code) << ": " << e.detail
            << "\n";
  for (const std::string& v : e.violations) std::cerr << "  " << v << "\n";
  switch (e.code) {
    case server::StoreErrorCode::kNotFound:
    case server::StoreErrorCode::kIoError:
      return kExitIo;
    case server::StoreErrorCode::kInvalidId:
      return kExitUsage;
    case server::StoreErrorCode::kCorruptFile:
      return kExitFailure;
  }
  return kExitFailure;
}

// Splits "host:port"; a bare port or bare host keeps the other default.
bool ParseAddr(const std::string& addr, server::ServerConfig& config) {
  const auto colon = addr.rfind(':');
  std::string host = colon == std::string::npos ? addr : addr.substr(0, colon);
  std::string port = colon == std::string::npos ? "" : addr.substr(colon + 1);
  if (!host.empty()) config.address = host;
  if (port.empty()) return true;
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(port, &used);
    if (used != port.size() || p > 65535) return false;
    config.port = static_cast<unsigned short>(p);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::optional<pcg::Catalog> LoadCatalog(const std::string& path, int& exit) {
  if (path.empty()) return pcg::DefaultCatalog();
  auto bytes = ReadFile(path);
  if (!bytes) {
    std::cerr << "error: " << bytes.error().detail << "\n";
    exit = kExitIo;
    return std::nullopt;
  }
  auto catalog = pcg::DecodeCatalog(*bytes);
  if (!catalog) {
    std::cerr << "error: catalog " << path << ": " << catalog.error().reason
              << "\n";
    exit = kExitFailure;
    return std::nullopt;
  }
  return std::move(*catalog);
}

struct ServeArgs {
  std::string addr = EnvOr("SLOWSPACE_ADDR", "127.0.0.1:8080");
  std::string data = EnvOr("SLOWSPACE_DATA", "./data");
  double wear_rate = server::ResiduePolicy{}.wear_rate;
  double autosave_s = 10.0;
  std::string static_dir;
  std::string catalog;
  int threads = 2;
};

int RunServe(const ServeArgs& a) {
  server::ServerConfig config;
  if (!ParseAddr(a.addr, config)) {
    std::cerr << "error: bad --addr " << a.addr << "\n";
    return kExitUsage;
  }
  config.data_dir = a.data;
  config.residue.wear_rate = a.wear_rate;
  if (!config.residue.IsValid() || a.autosave_s <= 0 || a.threads < 1) {
    std::cerr << "error: --wear-rate, --autosave and --threads must be positive\n";
    return kExitUsage;
  }
  config.autosave_interval = std::chrono::milliseconds(
      static_cast<std::int64_t>(a.autosave_s * 1000.0));
  if (!a.static_dir.empty()) config.static_dir = a.static_dir;
  config.threads = a.threads;
  int exit = kExitOk;
  auto catalog = LoadCatalog(a.catalog, exit);
  if (!catalog) return exit;
  config.catalog = std::move(*catalog);

  server::HttpServer srv(config);
  auto port = srv.Start();
  if (!port) {
    std::cerr << "error: " << port.error() << "\n";
    return kExitIo;
  }
  std::cerr << "listening on " << config.address << ":" << *port
            << ", data in " << config.data_dir.string() << "\n";
  srv.Wait();
  return kExitOk;
}

struct NewArgs {
  std::string name;
  std::uint64_t seed = 0;
  int width = GridSpec{}.width;
  int height = GridSpec{}.height;
  double cell_size = GridSpec{}.cell_size;
  std::string id;
  std::string data = EnvOr("SLOWSPACE_DATA", "./data");
  std::string out;
};

int RunNew(const NewArgs& a) {
  const std::string id = a.id.empty() ? server::GenerateSpaceId() : a.id;
  if (!server::IsValidSpaceId(id)) {
    std::cerr << "error: invalid id " << id << "\n";
    return kExitUsage;
  }
  auto space = NewSpace(id, a.name, a.seed, GridSpec{a.width, a.height, a.cell_size});
  if (!space) {
    std::cerr << "error: " << EditErrorName(space.error()) << "\n";
    return kExitUsage;
  }
  if (!a.out.empty()) {
    auto written = WriteFileAtomic(a.out, CanonicalBytes(*space));
    if (!written) {
      std::cerr << "error: " << written.error().detail << "\n";
      return kExitIo;
    }
  } else {
    std::error_code ec;
    fs::create_directories(a.data, ec);
    const server::SpaceStore store(a.data);
    if (store.Exists(id)) {
      std::cerr << "error: space " << id << " already exists\n";
      return kExitFailure;
    }
    auto saved = store.Save(*space);
    if (!saved) return ReportStoreError(saved.error());
  }
  std::cout << id << "\n";
  return kExitOk;
}

int RunValidate(const std::string& file) {
  auto bytes = ReadFile(file);
  if (!bytes) {
    std::cerr << "error: " << bytes.error().detail << "\n";
    return kExitIo;
  }
  auto space = DecodeSpace(*bytes);
  if (!space) {
    std::cout << "undecodable at byte " << space.error().position << ": "
              << space.error().reason << "\n";
    return kExitFailure;
  }
  const auto violations = ValidateSpace(*space);
  for (const std::string& v : violations) std::cout << v << "\n";
  return violations.empty() ? kExitOk : kExitFailure;
}

int RunExport(const std::string& file, const std::string& out,
              const std::string& catalog_path) {
  auto space = server::LoadSpaceFile(file);
  if (!space) return ReportStoreError(space.error());
  int exit = kExitOk;
  auto catalog = LoadCatalog(catalog_path, exit);
  if (!catalog) return exit;
  if (out.empty()) {
    auto scene = materializer::Materialize(*space, *catalog);
    if (!scene) {
      std::cerr << "error: " << pcg::PcgErrorName(scene.error()) << "\n";
      return kExitFailure;
    }
    std::cout << materializer::EncodeScene(*scene);
    return kExitOk;
  }
  auto exported = materializer::ExportScene(*space, *catalog, out);
  if (!exported) {
    std::cerr << "error: " << exported.error().detail << "\n";
    return exported.error().code == materializer::ExportErrorCode::kIoError
               ? kExitIo
               : kExitFailure;
  }
  return kExitOk;
}

int RunReplay(const std::string& file, const std::string& log_path) {
  auto creation = server::LoadSpaceFile(file);
  if (!creation) return ReportStoreError(creation.error());
  auto bytes = ReadFile(log_path);
  if (!bytes) {
    std::cerr << "error: " << bytes.error().detail << "\n";
    return kExitIo;
  }
  auto log = server::DecodeLog(*bytes);
  if (!log) {
    std::cerr << "error: log: " << log.error().reason << "\n";
    return kExitFailure;
  }
  auto replayed = server::ReplayLog(*creation, *log);
  if (!replayed) {
    std::cerr << "error: replay failed at seq " << replayed.error().seq << ": "
              << replayed.error().reason << "\n";
    return kExitFailure;
  }
  std::cout << SceneHash(*replayed) << "\n";
  return kExitOk;
}

int RunFuzz(const fuzz::FuzzOptions& options, bool verbose) {
  const fuzz::FuzzReport report = fuzz::RunConvergenceFuzz(options);
  if (verbose) {
    std::cerr << "generated " << report.generated << ", local rejects "
              << report.local_rejected << ", server rejects "
              << report.server_rejected << ", reconnects " << report.reconnects
              << ", id rewrites " << report.id_rewrites << ", log length "
              << report.log.size() << "\n";
  }
  if (!report.converged) {
    std::cerr << "not converged: " << report.failure << "\n";
    return kExitFailure;
  }
  std::cout << report.server_hash << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slowspace: collaborative slow-space editing engine"};
  app.require_subcommand(1);

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the session server");
  serve_cmd->add_option("--addr", serve.addr, "host:port (env SLOWSPACE_ADDR)");
  serve_cmd->add_option("--data", serve.data, "Data directory (env SLOWSPACE_DATA)");
  serve_cmd->add_option("--wear-rate", serve.wear_rate, "Wear per second of presence");
  serve_cmd->add_option("--autosave", serve.autosave_s, "Autosave interval in seconds");
  serve_cmd->add_option("--static", serve.static_dir, "Directory served at /");
  serve_cmd->add_option("--catalog", serve.catalog, "Ecosystem catalog file");
  serve_cmd->add_option("--threads", serve.threads, "I/O threads");

  NewArgs fresh;
  auto* new_cmd = app.add_subcommand("new", "Write a fresh space file and print its id");
  new_cmd->add_option("--name", fresh.name, "Display name")->required();
  new_cmd->add_option("--seed", fresh.seed, "64-bit PCG seed");
  new_cmd->add_option("--width", fresh.width, "Cells along x");
  new_cmd->add_option("--height", fresh.height, "Cells along z");
  new_cmd->add_option("--cell-size", fresh.cell_size, "Cell edge in meters");
  new_cmd->add_option("--id", fresh.id, "Space id (generated when absent)");
  new_cmd->add_option("--data", fresh.data, "Data directory (env SLOWSPACE_DATA)");
  new_cmd->add_option("-o,--out", fresh.out, "Write to this path instead of the data directory");

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "Check a space file");
  validate_cmd->add_option("FILE", validate_file)->required();

  std::string export_file, export_out, export_catalog;
  auto* export_cmd = app.add_subcommand("export", "Write the SceneDescription of a space file");
  export_cmd->add_option("FILE", export_file)->required();
  export_cmd->add_option("-o,--out", export_out, "Output path (stdout when absent)");
  export_cmd->add_option("--catalog", export_catalog, "Ecosystem catalog file");

  std::string replay_file, replay_log;
  auto* replay_cmd = app.add_subcommand("replay", "Replay an op log and print the final scene hash");
  replay_cmd->add_option("FILE", replay_file, "Creation-state space file")->required();
  replay_cmd->add_option("LOG", replay_log, "Op log (JSON lines)")->required();

  fuzz::FuzzOptions fuzz_options;
  bool fuzz_verbose = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the convergence fuzzer");
  fuzz_cmd->add_option("--clients", fuzz_options.clients)->check(CLI::Range(1, 64));
  fuzz_cmd->add_option("--ops", fuzz_options.ops)->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--seed", fuzz_options.seed);
  fuzz_cmd->add_flag("-v,--verbose", fuzz_verbose, "Print run statistics to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*serve_cmd) return RunServe(serve);
  if (*new_cmd) return RunNew(fresh);
  if (*validate_cmd) return RunValidate(validate_file);
  if (*export_cmd) return RunExport(export_file, export_out, export_catalog);
  if (*replay_cmd) return RunReplay(replay_file, replay_log);
  if (*fuzz_cmd) return RunFuzz(fuzz_options, fuzz_verbose);
  return kExitUsage;
}
