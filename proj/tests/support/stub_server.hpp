#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <thread>

namespace httplib {
class Server;
}

namespace varm::testing {

struct StubReply {
  int status = 200;
  std::string body;
  int delay_ms = 0;
};

// Local HTTP endpoint that hands every POST body to `handler`. Listens on an
// ephemeral loopback port until destroyed.
class StubServer {
 public:
  using Handler = std::function<StubReply(const std::string& body, int request_index)>;

  explicit StubServer(Handler handler);
  ~StubServer();
  StubServer(const StubServer&) = delete;
  StubServer& operator=(const StubServer&) = delete;

  std::string url(const std::string& path = "/score") const;
  int requests() const { return requests_.load(); }
  int max_concurrent() const { return max_concurrent_.load(); }

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_concurrent_{0};
};

}  // namespace varm::testing
