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

#ifndef SLOWSPACE_SERVER_HTTP_SERVER_H_
#define SLOWSPACE_SERVER_HTTP_SERVER_H_

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "slowspace/pcg/ecosystem.h"
#include "slowspace/server/session.h"
#include "slowspace/util/expected.h"

namespace slowspace::server {

struct ServerConfig {
  std::string address = "127.0.0.1";
  unsigned short port = 8080;  // 0 picks a free port
  std::filesystem::path data_dir = "data";
  ResiduePolicy residue;
  std::chrono::milliseconds autosave_interval{10'000};
  // Served at / when set (the browser editor's assets).
  std::optional<std::filesystem::path> static_dir;
  pcg::Catalog catalog = pcg::DefaultCatalog();
  int threads = 1;
};

// Hosts spaces over HTTP and WebSocket:
//
//   GET  /spaces              [{"id":..,"name":..}]
//   POST /spaces              {"name":s,"seed":n,"grid":{...}} -> {"id":..}
//   GET  /spaces/{id}/file    canonical space file (live state if open)
//   GET  /spaces/{id}/export  SceneDescription
//   WS   /ws/{id}             sync protocol, one envelope per text frame
//
// Each open space has one strand that serializes every event touching its
// Session; connections have their own FIFO write queues. Every applied op is
// appended to data_dir/logs/{id}/{seq}.log.jsonl, where {seq} is the op_seq
// the space had when it was opened and {seq}.base.json holds that state.
class HttpServer {
 public:
  explicit HttpServer(ServerConfig config);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds, starts the worker threads and returns the bound port.
  Expected<unsigned short, std::string> Start();
  // Stops accepting, closes connections and saves every dirty space.
  void Stop();
  // Blocks until Stop() is called from another thread or a signal arrives.
  void Wait();

  class Impl;  // opaque; public so the connection types can name it

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace slowspace::server

#endif  // SLOWSPACE_SERVER_HTTP_SERVER_H_
