/*
 * Copyright 2026 The shaclform Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <string>

#include "shaclform/error.hpp"
#include "shaclform/submission.hpp"

namespace shaclform::submission {

namespace {

constexpr int kCounterWidth = 6;

// RAII descriptor holding an exclusive flock.
class LockedFile {
public:
    explicit LockedFile(const std::string& path) : fd_(::open(path.c_str(), O_RDWR | O_CREAT, 0644)) {
        if (fd_ < 0) throw ConfigError("counter state " + path + ": " + std::strerror(errno));
        if (::flock(fd_, LOCK_EX) != 0) {
            int err = errno;
            ::close(fd_);
            throw ConfigError("counter state " + path + ": " + std::strerror(err));
        }
    }
    ~LockedFile() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    LockedFile(const LockedFile&) = delete;
    LockedFile& operator=(const LockedFile&) = delete;

    std::string read_all() const {
        std::string out;
        char buf[256];
        ::lseek(fd_, 0, SEEK_SET);
        for (ssize_t n; (n = ::read(fd_, buf, sizeof buf)) > 0;) out.append(buf, static_cast<std::size_t>(n));
        return out;
    }

    bool write_all(const std::string& text) const {
        if (::ftruncate(fd_, 0) != 0 || ::lseek(fd_, 0, SEEK_SET) != 0) return false;
        return ::write(fd_, text.data(), text.size()) == static_cast<ssize_t>(text.size()) && ::fsync(fd_) == 0;
    }

private:
    int fd_;
};

std::uint64_t parse_counter(const std::string& text, const std::string& path) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return 0;
    std::size_t end = text.find_last_not_of(" \t\r\n") + 1;
    std::string digits = text.substr(begin, end - begin);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19) {
        throw ConfigError("counter state " + path + " does not hold a counter: \"" + digits + "\"");
    }
    return std::stoull(digits);
}

}  // namespace

std::string normalize_base(std::string base) {
    if (!base.empty() && base.back() != '/' && base.back() != '#') base += '/';
    return base;
}

Minter::Minter(MintingConfig config) : config_(std::move(config)), rng_(std::random_device{}()) {
    config_.base_iri = normalize_base(config_.base_iri);
    if (!rdf::is_absolute_iri(config_.base_iri)) {
        throw ConfigError("minting base \"" + config_.base_iri + "\" is not an absolute IRI");
    }
    if (config_.strategy == MintStrategy::counter) {
        if (config_.counter_state_path.empty()) throw ConfigError("counter minting needs a state file path");
        LockedFile file(config_.counter_state_path);
        auto text = file.read_all();
        parse_counter(text, config_.counter_state_path);
        if (text.empty() && !file.write_all("0\n")) {
            throw ConfigError("counter state " + config_.counter_state_path + " is not writable");
        }
    }
}

std::string Minter::mint() {
    std::lock_guard lock(mutex_);
    if (config_.strategy == MintStrategy::uuid) {
        char hex[33];
        std::snprintf(hex, sizeof hex, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                      static_cast<unsigned long long>(rng_()));
        return config_.base_iri + hex;
    }
    LockedFile file(config_.counter_state_path);
    std::uint64_t next = parse_counter(file.read_all(), config_.counter_state_path) + 1;
    if (!file.write_all(std::to_string(next) + "\n")) {
        throw Error("counter state " + config_.counter_state_path + " could not be updated");
    }
    std::string id = std::to_string(next);
    if (id.size() < kCounterWidth) id.insert(0, kCounterWidth - id.size(), '0');
    return config_.base_iri + id;
}

}  // namespace shaclform::submission
