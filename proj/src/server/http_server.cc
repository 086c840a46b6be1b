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

#include "slowspace/server/http_server.h"

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "slowspace/materializer/scene_description.h"
#include "slowspace/scene/canonical.h"
#include "slowspace/server/store.h"
#include "slowspace/sync/codec.h"
#include "slowspace/util/canonical_json.h"
#include "slowspace/util/file_io.h"
#include "slowspace/util/json_read.h"

namespace slowspace::server {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
namespace fs = std::filesystem;
using tcp = net::ip::tcp;

namespace {

class WsConnection;

// Owns one open space. Every member function except the constructor and
// Post() runs on strand_.
class SpaceHost : public std::enable_shared_from_this<SpaceHost> {
 public:
  SpaceHost(net::io_context& ioc, Session session, const SpaceStore& store,
            const ServerConfig& config)
      : strand_(net::make_strand(ioc)),
        session_(std::move(session)),
        store_(store),
        config_(config) {
    const Space& base = session_.base();
    const fs::path dir = store_.dir() / "logs" / base.space_id;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const std::string stem = std::to_string(base.op_seq);
    (void)WriteFileAtomic(dir / (stem + ".base.json"), CanonicalBytes(base));
    log_.open(dir / (stem + ".log.jsonl"), std::ios::binary | std::ios::app);
  }

  template <typename F>
  void Post(F&& f) {
    net::post(strand_, std::forward<F>(f));
  }

  void Join(const std::shared_ptr<WsConnection>& conn, std::string name);
  void Leave(const WsConnection* conn);
  void Submit(const WsConnection* conn, const sync::SubmitOp& submit);
  void Presence(const WsConnection* conn, const sync::PresenceReport& report);
  void CloseAll();

  void SaveIfDirty() {
    if (!session_.dirty()) return;
    auto saved = SaveSession(session_, store_);
    if (!saved) std::cerr << "autosave failed: " << saved.error().detail << "\n";
  }

  std::string FileBytes() const { return CanonicalBytes(session_.space()); }
  Space Snapshot() const { return session_.space(); }

 private:
  void Dispatch(const std::vector<Delivery>& out);

  net::strand<net::io_context::executor_type> strand_;
  Session session_;
  const SpaceStore& store_;
  const ServerConfig& config_;
  std::ofstream log_;
  std::map<sync::ClientId, std::shared_ptr<WsConnection>> conns_;
  std::map<const WsConnection*, sync::ClientId> ids_;
};

// One WebSocket client. Reads and writes happen on the socket's strand; the
// write queue keeps delivery FIFO.
class WsConnection : public std::enable_shared_from_this<WsConnection> {
 public:
  WsConnection(tcp::socket&& socket, std::shared_ptr<SpaceHost> host,
               std::string space_id)
      : ws_(std::move(socket)),
        host_(std::move(host)),
        space_id_(std::move(space_id)) {}

  void Run(http::request<http::string_body> req) {
    ws_.set_option(
        websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.text(true);
    ws_.async_accept(req, beast::bind_front_handler(&WsConnection::OnAccept,
                                                    shared_from_this()));
  }

  // Thread-safe.
  void Send(std::string message) {
    net::post(ws_.get_executor(),
              [self = shared_from_this(), m = std::move(message)]() mutable {
                self->queue_.push_back(std::move(m));
                if (self->queue_.size() == 1) self->DoWrite();
              });
  }

  // Thread-safe.
  void Close() {
    net::post(ws_.get_executor(), [self = shared_from_this()] {
      if (self->closed_) return;
      self->closed_ = true;
      beast::error_code ec;
      beast::get_lowest_layer(self->ws_).socket().shutdown(
          tcp::socket::shutdown_both, ec);
      beast::get_lowest_layer(self->ws_).close();
    });
  }

 private:
  void OnAccept(beast::error_code ec) {
    if (ec) return;
    DoRead();
  }

  void DoRead() {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsConnection::OnRead,
                                                      shared_from_this()));
  }

  void OnRead(beast::error_code ec, std::size_t) {
    if (ec) {
      closed_ = true;
      if (joined_) {
        host_->Post([host = host_, self = shared_from_this()] {
          host->Leave(self.get());
        });
      }
      return;
    }
    std::string bytes = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    if (!close_when_flushed_) HandleMessage(bytes);
    DoRead();
  }

  void HandleMessage(const std::string& bytes) {
    auto env = sync::Decode(bytes);
    if (!env) {
      SendError("DecodeError", env.error().reason);
      return;
    }
    if (const auto* hello = std::get_if<sync::Hello>(&*env)) {
      if (joined_) return SendError("UnexpectedMessage", "already joined");
      if (hello->proto_version != sync::kProtoVersion) {
        return SendError("UnsupportedVersion",
                         "server speaks protocol version 1", true);
      }
      if (hello->space_id != space_id_) {
        return SendError("WrongSpace", "hello names a different space", true);
      }
      joined_ = true;
      host_->Post([host = host_, self = shared_from_this(),
                   name = hello->client_name]() mutable {
        host->Join(self, std::move(name));
      });
      return;
    }
    if (!joined_) return SendError("UnexpectedMessage", "send hello first");
    if (const auto* submit = std::get_if<sync::SubmitOp>(&*env)) {
      host_->Post([host = host_, self = shared_from_this(), s = *submit] {
        host->Submit(self.get(), s);
      });
      return;
    }
    if (const auto* report = std::get_if<sync::PresenceReport>(&*env)) {
      host_->Post([host = host_, self = shared_from_this(), r = *report] {
        host->Presence(self.get(), r);
      });
      return;
    }
    SendError("UnexpectedMessage",
              "clients may send hello, submit and presence only");
  }

  // A fatal error closes the socket once the Error frame is written.
  void SendError(std::string code, std::string detail, bool fatal = false) {
    Send(sync::Encode(sync::Error{std::move(code), std::move(detail)}));
    if (!fatal) return;
    net::post(ws_.get_executor(), [self = shared_from_this()] {
      self->close_when_flushed_ = true;
      if (self->queue_.empty()) self->CloseGracefully();
    });
  }

  void CloseGracefully() {
    if (closed_) return;
    closed_ = true;
    ws_.async_close(websocket::close_code::policy_error,
                    [self = shared_from_this()](beast::error_code) {});
  }

  void DoWrite() {
    if (closed_) {
      queue_.clear();
      return;
    }
    ws_.async_write(net::buffer(queue_.front()),
                    beast::bind_front_handler(&WsConnection::OnWrite,
                                              shared_from_this()));
  }

  void OnWrite(beast::error_code ec, std::size_t) {
    if (ec) {
      closed_ = true;
      queue_.clear();
      return;
    }
    queue_.pop_front();
    if (!queue_.empty()) {
      DoWrite();
    } else if (close_when_flushed_) {
      CloseGracefully();
    }
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
  std::shared_ptr<SpaceHost> host_;
  std::string space_id_;
  bool joined_ = false;
  bool closed_ = false;
  bool close_when_flushed_ = false;
};

void SpaceHost::Dispatch(const std::vector<Delivery>& out) {
  for (const Delivery& d : out) {
    auto it = conns_.find(d.to);
    if (it != conns_.end()) it->second->Send(sync::Encode(d.envelope));
  }
}

void SpaceHost::Join(const std::shared_ptr<WsConnection>& conn,
                     std::string name) {
  std::vector<Delivery> out;
  const sync::ClientId id = session_.Join(std::move(name), out);
  conns_[id] = conn;
  ids_[conn.get()] = id;
  Dispatch(out);
}

void SpaceHost::Leave(const WsConnection* conn) {
  auto it = ids_.find(conn);
  if (it == ids_.end()) return;
  session_.Leave(it->second);
  conns_.erase(it->second);
  ids_.erase(it);
}

void SpaceHost::Submit(const WsConnection* conn, const sync::SubmitOp& submit) {
  auto it = ids_.find(conn);
  if (it == ids_.end()) return;
  const std::size_t before = session_.op_log().size();
  std::vector<Delivery> out;
  session_.HandleSubmit(it->second, submit, out);
  if (session_.op_log().size() != before && log_) {
    log_ << EncodeLogEntry(session_.op_log().back()) << '\n';
    log_.flush();
  }
  Dispatch(out);
}

void SpaceHost::Presence(const WsConnection* conn,
                         const sync::PresenceReport& report) {
  auto it = ids_.find(conn);
  if (it == ids_.end()) return;
  std::vector<Delivery> out;
  session_.RecordPresence(it->second, report, config_.residue, out);
  Dispatch(out);
}

void SpaceHost::CloseAll() {
  for (auto& [id, conn] : conns_) conn->Close();
}

std::string_view MimeType(const fs::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".html") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "text/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".png") return "image/png";
  if (ext == ".svg") return "image/svg+xml";
  return "application/octet-stream";
}

// Splits "/a/b/c" into {"a","b","c"}; ignores a query string.
std::vector<std::string> PathSegments(std::string_view target) {
  target = target.substr(0, target.find('?'));
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < target.size()) {
    if (target[i] == '/') {
      ++i;
      continue;
    }
    std::size_t j = target.find('/', i);
    if (j == std::string_view::npos) j = target.size();
    out.emplace_back(target.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

class HttpServer::Impl : public std::enable_shared_from_this<HttpServer::Impl> {
 public:
  explicit Impl(ServerConfig config)
      : config_(std::move(config)),
        store_(config_.data_dir),
        acceptor_(ioc_),
        autosave_(ioc_),
        work_(net::make_work_guard(ioc_)) {}

  Expected<unsigned short, std::string> Start() {
    beast::error_code ec;
    auto address = net::ip::make_address(config_.address, ec);
    if (ec) return MakeUnexpected("bad address: " + ec.message());
    tcp::endpoint endpoint{address, config_.port};
    acceptor_.open(endpoint.protocol(), ec);
    if (!ec) acceptor_.set_option(net::socket_base::reuse_address(true), ec);
    if (!ec) acceptor_.bind(endpoint, ec);
    if (!ec) acceptor_.listen(net::socket_base::max_listen_connections, ec);
    if (ec) return MakeUnexpected("listen: " + ec.message());
    std::error_code fec;
    fs::create_directories(config_.data_dir, fec);
    DoAccept();
    ScheduleAutosave();
    const int n = std::max(1, config_.threads);
    for (int i = 0; i < n; ++i) threads_.emplace_back([this] { ioc_.run(); });
    return acceptor_.local_endpoint().port();
  }

  void Stop() {
    {
      std::lock_guard lock(stop_mu_);
      if (stopped_) return;
      stopped_ = true;
    }
    std::promise<void> closed;
    net::post(ioc_, [this, &closed] {
      beast::error_code ec;
      acceptor_.close(ec);
      autosave_.cancel();
      closed.set_value();
    });
    closed.get_future().wait();
    std::vector<std::shared_ptr<SpaceHost>> hosts;
    {
      std::lock_guard lock(hosts_mu_);
      for (auto& [id, host] : hosts_) hosts.push_back(host);
    }
    for (auto& host : hosts) {
      std::promise<void> done;
      host->Post([&host, &done] {
        host->CloseAll();
        host->SaveIfDirty();
        done.set_value();
      });
      done.get_future().wait();
    }
    work_.reset();
    ioc_.stop();
    for (auto& t : threads_) t.join();
    threads_.clear();
    {
      std::lock_guard lock(stop_mu_);
      joined_ = true;
    }
    stop_cv_.notify_all();
  }

  void Wait() {
    net::signal_set signals(ioc_, SIGINT, SIGTERM);
    signals.async_wait([this](beast::error_code ec, int) {
      if (ec) return;
      std::lock_guard lock(stop_mu_);
      signal_seen_ = true;
      stop_cv_.notify_all();
    });
    std::unique_lock lock(stop_mu_);
    stop_cv_.wait(lock, [this] { return signal_seen_ || joined_; });
    if (signal_seen_ && !stopped_) {
      lock.unlock();
      Stop();
    }
  }

  // Returns the host for an existing space, opening it on first use.
  Expected<std::shared_ptr<SpaceHost>, StoreError> Host(const std::string& id) {
    std::lock_guard lock(hosts_mu_);
    auto it = hosts_.find(id);
    if (it != hosts_.end()) return it->second;
    auto session = OpenSession(store_, id);
    if (!session) return MakeUnexpected(session.error());
    auto host =
        std::make_shared<SpaceHost>(ioc_, std::move(*session), store_, config_);
    hosts_[id] = host;
    return host;
  }

  std::shared_ptr<SpaceHost> OpenHostOrNull(const std::string& id) {
    std::lock_guard lock(hosts_mu_);
    auto it = hosts_.find(id);
    return it == hosts_.end() ? nullptr : it->second;
  }

  const ServerConfig& config() const { return config_; }
  const SpaceStore& store() const { return store_; }
  std::mutex& create_mu() { return create_mu_; }

 private:
  void DoAccept();

  void ScheduleAutosave() {
    autosave_.expires_after(config_.autosave_interval);
    autosave_.async_wait([this](beast::error_code ec) {
      if (ec) return;
      std::lock_guard lock(hosts_mu_);
      for (auto& [id, host] : hosts_) {
        host->Post([host = host] { host->SaveIfDirty(); });
      }
      ScheduleAutosave();
    });
  }

  ServerConfig config_;
  SpaceStore store_;
  net::io_context ioc_;
  tcp::acceptor acceptor_;
  net::steady_timer autosave_;
  net::executor_work_guard<net::io_context::executor_type> work_;
  std::vector<std::thread> threads_;

  std::mutex hosts_mu_;
  std::map<std::string, std::shared_ptr<SpaceHost>> hosts_;
  std::mutex create_mu_;

  std::mutex stop_mu_;
  std::condition_variable stop_cv_;
  bool stopped_ = false;
  bool joined_ = false;
  bool signal_seen_ = false;
};

namespace {

using Response = http::response<http::string_body>;

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket&& socket, HttpServer::Impl& server)
      : stream_(std::move(socket)), server_(server) {}

  void Run() {
    net::dispatch(stream_.get_executor(),
                  beast::bind_front_handler(&HttpSession::DoRead,
                                            shared_from_this()));
  }

 private:
  void DoRead() {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, req_,
                     beast::bind_front_handler(&HttpSession::OnRead,
                                               shared_from_this()));
  }

  void OnRead(beast::error_code ec, std::size_t) {
    if (ec) {
      stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
      return;
    }
    const auto segments = PathSegments(
        std::string_view(req_.target().data(), req_.target().size()));
    if (websocket::is_upgrade(req_)) {
      if (segments.size() != 2 || segments[0] != "ws") {
        return Reply(http::status::not_found, "text/plain", "no such socket\n");
      }
      auto host = server_.Host(segments[1]);
      if (!host) return ReplyStoreError(host.error());
      stream_.expires_never();
      std::make_shared<WsConnection>(stream_.release_socket(), *host,
                                     segments[1])
          ->Run(std::move(req_));
      return;
    }
    Route(segments);
  }

  void Route(const std::vector<std::string>& seg) {
    const auto method = req_.method();
    if (seg.size() == 1 && seg[0] == "spaces") {
      if (method == http::verb::get) return ListSpaces();
      if (method == http::verb::post) return CreateSpace();
      return Reply(http::status::method_not_allowed, "text/plain", "\n");
    }
    if (seg.size() == 3 && seg[0] == "spaces" && method == http::verb::get &&
        (seg[2] == "file" || seg[2] == "export")) {
      return ServeSpace(seg[1], seg[2] == "export");
    }
    if (method == http::verb::get) return ServeStatic(seg);
    Reply(http::status::not_found, "text/plain", "not found\n");
  }

  void ListSpaces() {
    CanonicalJsonWriter w;
    w.BeginArray();
    for (const auto& [id, name] : server_.store().List()) {
      w.BeginObject();
      w.Key("id");
      w.String(id);
      w.Key("name");
      w.String(name);
      w.EndObject();
    }
    w.EndArray();
    Reply(http::status::ok, "application/json", w.Take());
  }

  void CreateSpace() {
    auto parsed = json_read::Parse(req_.body());
    if (!parsed) {
      return Reply(http::status::bad_request, "text/plain",
                   parsed.error().reason + "\n");
    }
    std::string id;
    std::string name;
    std::uint64_t seed = 0;
    GridSpec grid;
    try {
      using namespace json_read;
      ExpectObject(*parsed, "body", {"name"}, {"seed", "grid", "id"});
      name = GetString(Field(*parsed, "name"), "name");
      if (parsed->contains("seed")) seed = GetU64(Field(*parsed, "seed"), "seed");
      if (parsed->contains("grid")) {
        const Json& g = Field(*parsed, "grid");
        ExpectObject(g, "grid", {"width", "height", "cell_size"});
        grid.width = GetI32(Field(g, "width"), "grid.width");
        grid.height = GetI32(Field(g, "height"), "grid.height");
        grid.cell_size = GetReal(Field(g, "cell_size"), "grid.cell_size");
      }
      id = parsed->contains("id") ? GetString(Field(*parsed, "id"), "id")
                                  : GenerateSpaceId();
    } catch (const json_read::SchemaError& e) {
      return Reply(http::status::bad_request, "text/plain",
                   std::string(e.what()) + "\n");
    }
    if (!IsValidSpaceId(id)) {
      return Reply(http::status::bad_request, "text/plain", "invalid id\n");
    }
    auto space = NewSpace(id, name, seed, grid);
    if (!space) {
      return Reply(http::status::bad_request, "text/plain", "InvalidGrid\n");
    }
    std::lock_guard lock(server_.create_mu());
    if (server_.store().Exists(id)) {
      return Reply(http::status::conflict, "text/plain", "exists\n");
    }
    auto saved = server_.store().Save(*space);
    if (!saved) {
      return Reply(http::status::internal_server_error, "text/plain",
                   saved.error().detail + "\n");
    }
    CanonicalJsonWriter w;
    w.BeginObject();
    w.Key("id");
    w.String(id);
    w.EndObject();
    Reply(http::status::created, "application/json", w.Take());
  }

  void ServeSpace(const std::string& id, bool export_scene) {
    auto respond = [self = shared_from_this(), export_scene](Space space) {
      if (!export_scene) {
        return self->Reply(http::status::ok, "application/json",
                           CanonicalBytes(space));
      }
      auto scene = materializer::Materialize(space, self->server_.config().catalog);
      if (!scene) {
        return self->Reply(http::status::internal_server_error, "text/plain",
                           std::string(pcg::PcgErrorName(scene.error())) + "\n");
      }
      self->Reply(http::status::ok, "application/json",
                  materializer::EncodeScene(*scene));
    };
    if (auto host = server_.OpenHostOrNull(id)) {
      // Snapshot on the space's strand, answer on ours.
      host->Post([host, self = shared_from_this(), respond]() mutable {
        Space snapshot = host->Snapshot();
        net::post(self->stream_.get_executor(),
                  [respond, s = std::move(snapshot)]() mutable {
                    respond(std::move(s));
                  });
      });
      return;
    }
    auto space = server_.store().Load(id);
    if (!space) return ReplyStoreError(space.error());
    respond(std::move(*space));
  }

  void ServeStatic(const std::vector<std::string>& seg) {
    const auto& dir = server_.config().static_dir;
    if (!dir) return Reply(http::status::not_found, "text/plain", "not found\n");
    fs::path path = *dir;
    for (const std::string& s : seg) {
      if (s == ".." || s == "." || s.find('\\') != std::string::npos) {
        return Reply(http::status::bad_request, "text/plain", "bad path\n");
      }
      path /= s;
    }
    std::error_code ec;
    if (seg.empty() || fs::is_directory(path, ec)) path /= "index.html";
    auto bytes = ReadFile(path);
    if (!bytes) return Reply(http::status::not_found, "text/plain", "not found\n");
    Reply(http::status::ok, MimeType(path), std::move(*bytes));
  }

  void ReplyStoreError(const StoreError& e) {
    const auto status = e.code == StoreErrorCode::kNotFound
                            ? http::status::not_found
                            : http::status::internal_server_error;
    std::string body(StoreErrorName(e.code));
    for (const std::string& v : e.violations) body += "\n" + v;
    Reply(status, "text/plain", body + "\n");
  }

  void Reply(http::status status, std::string_view content_type,
             std::string body) {
    auto res = std::make_shared<Response>(status, req_.version());
    res->set(http::field::server, "slowspace");
    res->set(http::field::content_type, std::string(content_type));
    res->keep_alive(req_.keep_alive());
    res->body() = std::move(body);
    res->prepare_payload();
    http::async_write(stream_, *res,
                      [self = shared_from_this(), res](beast::error_code ec,
                                                       std::size_t) {
                        if (ec || res->need_eof()) {
                          self->stream_.socket().shutdown(
                              tcp::socket::shutdown_send, ec);
                          return;
                        }
                        self->DoRead();
                      });
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
  HttpServer::Impl& server_;
};

}  // namespace

void HttpServer::Impl::DoAccept() {
  acceptor_.async_accept(
      net::make_strand(ioc_), [this](beast::error_code ec, tcp::socket socket) {
        if (ec) {
          if (ec == net::error::operation_aborted) return;
        } else {
          std::make_shared<HttpSession>(std::move(socket), *this)->Run();
        }
        DoAccept();
      });
}

HttpServer::HttpServer(ServerConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpServer::~HttpServer() { Stop(); }

Expected<unsigned short, std::string> HttpServer::Start() {
  return impl_->Start();
}

void HttpServer::Stop() { impl_->Stop(); }

void HttpServer::Wait() { impl_->Wait(); }

}  // namespace slowspace::server
