#include "ndtsim/packet.hpp"

#include <cstdio>

namespace ndtsim {

namespace {

std::string FormatSeconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", s);
    return buf;
}

std::string JoinIds(const std::vector<NodeId>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids[i]);
    }
    out += "]";
    return out;
}

struct KindNameVisitor {
    const char* operator()(const RreqPacket&) const { return "RREQ"; }
    const char* operator()(const RrepPacket&) const { return "RREP"; }
    const char* operator()(const RerrPacket&) const { return "RERR"; }
    const char* operator()(const HelloPacket&) const { return "HELLO"; }
    const char* operator()(const DataPacket&) const { return "DATA"; }
};

struct DetailVisitor {
    std::string operator()(const RreqPacket& p) const {
        std::string seq = p.dest_seq_known ? std::to_string(*p.dest_seq_known) : "unknown";
        return "orig=" + std::to_string(p.originator) +
               " oseq=" + std::to_string(p.originator_seq) +
               " id=" + std::to_string(p.rreq_id) +
               " dest=" + std::to_string(p.dest.value) + " dseq=" + seq +
               " hops=" + std::to_string(p.hop_count) +
               " ttl=" + std::to_string(p.ttl);
    }
    std::string operator()(const RrepPacket& p) const {
        return "dest=" + std::to_string(p.dest.value) +
               " dseq=" + std::to_string(p.dest_seq) +
               " orig=" + std::to_string(p.originator) +
               " hops=" + std::to_string(p.hop_count) +
               " life=" + FormatSeconds(p.lifetime_s);
    }
    std::string operator()(const RerrPacket& p) const {
        std::string out = "unreachable=";
        for (std::size_t i = 0; i < p.unreachable.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(p.unreachable[i].first.value) + ":" +
                   std::to_string(p.unreachable[i].second);
        }
        return out;
    }
    std::string operator()(const HelloPacket& p) const {
        return "orig=" + std::to_string(p.originator) +
               " oseq=" + std::to_string(p.originator_seq) +
               " alarm=" + JoinIds(p.alarm_payload);
    }
    std::string operator()(const DataPacket& p) const {
        return "flow=" + std::to_string(p.flow_id) +
               " seq=" + std::to_string(p.seq_no) +
               " src=" + std::to_string(p.src) + " dst=" + std::to_string(p.dst) +
               " bytes=" + std::to_string(p.size_bytes) +
               " sent=" + FormatSeconds(p.sent_at.Seconds());
    }
};

} // namespace

const char* kind_name(const Packet& pkt) {
    return std::visit(KindNameVisitor{}, pkt);
}

std::string packet_detail(const Packet& pkt) {
    return std::visit(DetailVisitor{}, pkt);
}

} // namespace ndtsim
