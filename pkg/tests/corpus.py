"""Shared test corpora.

Two fixtures live in tests/data: the six-API path-query corpus used by
the end-to-end replay tests, and a ~60-API "desk" corpus wide enough to
exercise retrieval, multi-round trees, and the evaluation harness. Both
are checked in as data files; the builders here regenerate them so a
test can assert the files never drift from their source of truth.
"""

from __future__ import annotations

import json
from pathlib import Path

DATA_DIR = Path(__file__).parent / "data"

DEMO_PAIRS = [
    (
        "java.io.File.getAbsolutePath()",
        "Returns the path, the absolute path string of the current working directory.",
    ),
    (
        "java.io.File.getCanonicalPath()",
        "Returns the path, the canonical path string of the current working directory.",
    ),
    (
        "java.nio.file.Path.toAbsolutePath()",
        "Returns the path, the absolute path object of this path.",
    ),
    (
        "java.nio.file.Paths.get(java.lang.String, java.lang.String)",
        "Converts a path string, or a sequence of strings that when joined form a path"
        " string, to a path.",
    ),
    (
        "java.nio.file.FileSystem.getPath(java.lang.String, java.lang.String)",
        "Converts a path string to a path.",
    ),
    (
        "java.lang.System.getProperty(java.lang.String)",
        "Returns the system property, the absolute path string of the current working"
        " directory.",
    ),
]

DEMO_TRIPLES = [
    ("File.getAbsolutePath()", "Function Similarity", "File.getCanonicalPath()"),
    ("File.getAbsolutePath()", "Function Similarity", "Path.toAbsolutePath()"),
    ("File.getAbsolutePath()", "Function Collaboration", "Paths.get()"),
    ("File.getAbsolutePath()", "Function Collaboration", "FileSystem.getPath()"),
]

# ---------------------------------------------------------------------------
# desk corpus: (class, method, description) grouped in behavior families

_DESK = [
    # read message
    ("com.desk.io.MessageReader", "readNewMessage()", "Reads the new message in the buffer."),
    ("com.desk.io.MessageReader", "readNewMessageCached()", "Reads the new message in the cache."),
    ("com.desk.io.MessageReader", "readRawMessage()", "Reads the raw message in the buffer."),
    ("com.desk.io.MessageReader", "readRawMessageCached()", "Reads the raw message in the cache."),
    ("com.desk.io.MessageReader", "readBinaryMessage()", "Reads the binary message using the given codec."),
    ("com.desk.io.MessageReader", "readSecureMessage()", "Reads the secure message if the channel is open."),
    # write message
    ("com.desk.io.MessageWriter", "writeNewMessage()", "Writes the new message to the stream."),
    ("com.desk.io.MessageWriter", "writeRawMessage()", "Writes the raw message to the stream."),
    ("com.desk.io.MessageWriter", "writeBinaryMessage()", "Writes the binary message into the channel."),
    ("com.desk.io.MessageWriter", "writeSecureMessage()", "Writes the secure message to the stream using the given codec."),
    # convert token
    ("com.desk.text.TokenConverter", "convertToken()", "Converts the valid token to a string."),
    ("com.desk.text.TokenConverter", "convertRawToken()", "Converts the raw token to a string."),
    ("com.desk.text.TokenConverter", "convertTokenNumber()", "Converts the valid token to a number."),
    # create file
    ("com.desk.fs.FileFactory", "createFile()", "Creates the new file in the directory."),
    ("com.desk.fs.FileFactory", "createTempFile()", "Creates the temporary file in the directory."),
    ("com.desk.fs.FileFactory", "createEmptyFile()", "Creates the empty file for the caller."),
    ("com.desk.fs.FileFactory", "createSecureFile()", "Creates the secure file if the parent is writable."),
    # remove entry
    ("com.desk.cache.CacheStore", "removeEntry()", "Removes the first entry from the cache."),
    ("com.desk.cache.CacheStore", "removeLastEntry()", "Removes the last entry from the cache."),
    # find key
    ("com.desk.cache.KeyFinder", "findKey()", "Finds the unique key in the cache."),
    ("com.desk.cache.KeyFinder", "findLocalKey()", "Finds the local key in the cache."),
    ("com.desk.cache.KeyFinder", "findRemoteKey()", "Finds the remote key at the head."),
    ("com.desk.cache.KeyFinder", "findDefaultKey()", "Finds the default key when the cache is empty."),
    # copy / move file
    ("com.desk.fs.FileTools", "copyFile()", "Copies the whole file from the source."),
    ("com.desk.fs.FileTools", "copyTempFile()", "Copies the temporary file from the source."),
    ("com.desk.fs.FileTools", "moveFile()", "Moves the whole file down the tree."),
    ("com.desk.fs.FileTools", "moveTempFile()", "Moves the temporary file down the tree."),
    # open / close socket
    ("com.desk.net.SocketControl", "closeSocket()", "Closes the open socket so that the port can be reused."),
    ("com.desk.net.SocketControl", "closeRemoteSocket()", "Closes the remote socket so that the port can be reused."),
    ("com.desk.net.SocketControl", "openSocket()", "Opens the local socket as a stream."),
    ("com.desk.net.SocketControl", "openRemoteSocket()", "Opens the remote socket as a stream."),
    # parse
    ("com.desk.text.Parser", "parseText()", "Fully parses the text producing a temporal object."),
    ("com.desk.text.Parser", "parseHeader()", "Partially parses the raw header producing a number."),
    # encode / decode value
    ("com.desk.codec.ValueCodec", "encodeValue()", "Encodes the primitive value as a string."),
    ("com.desk.codec.ValueCodec", "encodeRawValue()", "Encodes the raw value as a string."),
    ("com.desk.codec.ValueCodec", "decodeValue()", "Decodes the primitive value using the default codec."),
    ("com.desk.codec.ValueCodec", "decodeRawValue()", "Decodes the raw value using the default codec."),
    # store / load node
    ("com.desk.db.NodeStore", "storeNode()", "Stores the new node in the index."),
    ("com.desk.db.NodeStore", "storeMutableNode()", "Stores the mutable node in the index."),
    ("com.desk.db.NodeStore", "loadNode()", "Loads the new node from the index."),
    ("com.desk.db.NodeStore", "loadMutableNode()", "Loads the mutable node from the index."),
    # append / insert element
    ("com.desk.list.SeqOps", "appendElement()", "Appends the single element to the list."),
    ("com.desk.list.SeqOps", "appendLastElement()", "Appends the last element to the list."),
    ("com.desk.list.SeqOps", "insertElement()", "Inserts the single element at the head."),
    ("com.desk.list.SeqOps", "insertFirstElement()", "Inserts the first element at the head."),
    # fetch document
    ("com.desk.web.DocFetcher", "fetchDocument()", "Fetches the remote document for the client."),
    ("com.desk.web.DocFetcher", "fetchLocalDocument()", "Fetches the local document for the client."),
    ("com.desk.web.DocFetcher", "fetchSecureDocument()", "Fetches the secure document by the agent."),
    ("com.desk.web.DocFetcher", "fetchRawDocument()", "Fetches the raw document by the agent."),
    # checksum
    ("com.desk.math.Hasher", "computeChecksum()", "Computes the full checksum of the payload."),
    ("com.desk.math.Hasher", "computeShortChecksum()", "Computes the short checksum of the payload."),
    ("com.desk.math.Hasher", "verifyChecksum()", "Verifies the full checksum of the payload."),
    # send / receive packet
    ("com.desk.net.PacketIO", "sendPacket()", "Sends the next packet through the channel."),
    ("com.desk.net.PacketIO", "sendLastPacket()", "Sends the last packet through the channel."),
    ("com.desk.net.PacketIO", "receivePacket()", "Receives the next packet from the channel."),
    ("com.desk.net.PacketIO", "receiveLastPacket()", "Receives the last packet from the channel."),
    # listeners
    ("com.desk.ui.Events", "registerListener()", "Registers the new listener for the panel."),
    ("com.desk.ui.Events", "registerDefaultListener()", "Registers the default listener for the panel."),
    ("com.desk.ui.Events", "unregisterListener()", "Unregisters the new listener for the panel."),
    ("com.desk.ui.Events", "unregisterDefaultListener()", "Unregisters the default listener for the panel."),
]

DESK_PAIRS = [(f"{cls}.{method}", desc) for cls, method, desc in _DESK]


DESK_TRIPLES = [
    # similarity chains inside each family
    ("MessageReader.readNewMessage()", "Function Similarity", "MessageReader.readNewMessageCached()"),
    ("MessageReader.readRawMessage()", "Function Similarity", "MessageReader.readRawMessageCached()"),
    ("MessageReader.readBinaryMessage()", "Function Similarity", "MessageReader.readSecureMessage()"),
    ("MessageWriter.writeNewMessage()", "Function Similarity", "MessageWriter.writeRawMessage()"),
    ("TokenConverter.convertToken()", "Function Similarity", "TokenConverter.convertRawToken()"),
    ("FileFactory.createFile()", "Function Similarity", "FileFactory.createTempFile()"),
    ("KeyFinder.findKey()", "Function Similarity", "KeyFinder.findLocalKey()"),
    ("KeyFinder.findRemoteKey()", "Function Similarity", "KeyFinder.findDefaultKey()"),
    ("FileTools.copyFile()", "Function Similarity", "FileTools.copyTempFile()"),
    ("NodeStore.storeNode()", "Function Similarity", "NodeStore.storeMutableNode()"),
    ("SeqOps.appendElement()", "Function Similarity", "SeqOps.appendLastElement()"),
    ("DocFetcher.fetchDocument()", "Function Similarity", "DocFetcher.fetchLocalDocument()"),
    ("PacketIO.sendPacket()", "Function Similarity", "PacketIO.sendLastPacket()"),
    # opposites
    ("SocketControl.openSocket()", "Function Opposite", "SocketControl.closeSocket()"),
    ("SocketControl.openRemoteSocket()", "Function Opposite", "SocketControl.closeRemoteSocket()"),
    ("ValueCodec.encodeValue()", "Function Opposite", "ValueCodec.decodeValue()"),
    ("NodeStore.storeNode()", "Function Opposite", "NodeStore.loadNode()"),
    ("Events.registerListener()", "Function Opposite", "Events.unregisterListener()"),
    # replacement
    ("FileTools.copyFile()", "Function Replace", "FileTools.moveFile()"),
    ("SeqOps.appendElement()", "Function Replace", "SeqOps.insertElement()"),
    # collaboration
    ("MessageReader.readNewMessage()", "Function Collaboration", "MessageWriter.writeNewMessage()"),
    ("PacketIO.sendPacket()", "Function Collaboration", "PacketIO.receivePacket()"),
    ("Hasher.computeChecksum()", "Function Collaboration", "Hasher.verifyChecksum()"),
    ("SocketControl.openSocket()", "Function Collaboration", "PacketIO.sendPacket()"),
    # the remaining kinds
    ("SocketControl.openSocket()", "Logic Constraint", "SocketControl.closeRemoteSocket()"),
    ("MessageReader.readNewMessage()", "Behavior Difference", "MessageReader.readSecureMessage()"),
    ("Hasher.computeChecksum()", "Efficiency Comparison", "Hasher.computeShortChecksum()"),
]


# ground-truth evaluation queries over the desk corpus; "extended" lists
# the semantic neighbors a perfect run would also surface
DESK_QUERIES = [
    ("read the new message in the buffer", "com.desk.io.MessageReader.readNewMessage",
     ["com.desk.io.MessageReader.readNewMessageCached", "com.desk.io.MessageWriter.writeNewMessage",
      "com.desk.io.MessageReader.readSecureMessage"]),
    ("read the raw message", "com.desk.io.MessageReader.readRawMessage",
     ["com.desk.io.MessageReader.readRawMessageCached"]),
    ("read a secure message", "com.desk.io.MessageReader.readSecureMessage",
     ["com.desk.io.MessageReader.readBinaryMessage", "com.desk.io.MessageReader.readNewMessage"]),
    ("write the new message to the stream", "com.desk.io.MessageWriter.writeNewMessage",
     ["com.desk.io.MessageWriter.writeRawMessage", "com.desk.io.MessageReader.readNewMessage"]),
    ("write a binary message into the channel", "com.desk.io.MessageWriter.writeBinaryMessage", []),
    ("convert the token to a string", "com.desk.text.TokenConverter.convertToken",
     ["com.desk.text.TokenConverter.convertRawToken"]),
    ("create a temporary file", "com.desk.fs.FileFactory.createTempFile",
     ["com.desk.fs.FileFactory.createFile"]),
    ("create a file for the caller", "com.desk.fs.FileFactory.createEmptyFile", []),
    ("remove the first entry from the cache", "com.desk.cache.CacheStore.removeEntry", []),
    ("find the local key in the cache", "com.desk.cache.KeyFinder.findLocalKey",
     ["com.desk.cache.KeyFinder.findKey"]),
    ("find the key when the cache is empty", "com.desk.cache.KeyFinder.findDefaultKey",
     ["com.desk.cache.KeyFinder.findRemoteKey"]),
    ("copy the whole file", "com.desk.fs.FileTools.copyFile",
     ["com.desk.fs.FileTools.copyTempFile", "com.desk.fs.FileTools.moveFile"]),
    ("move a file down the tree", "com.desk.fs.FileTools.moveFile",
     ["com.desk.fs.FileTools.copyFile"]),
    ("close the open socket", "com.desk.net.SocketControl.closeSocket",
     ["com.desk.net.SocketControl.openSocket"]),
    ("open a socket as a stream", "com.desk.net.SocketControl.openSocket",
     ["com.desk.net.SocketControl.closeSocket", "com.desk.net.PacketIO.sendPacket",
      "com.desk.net.SocketControl.closeRemoteSocket"]),
    ("encode the value as a string", "com.desk.codec.ValueCodec.encodeValue",
     ["com.desk.codec.ValueCodec.decodeValue"]),
    ("store the mutable node in the index", "com.desk.db.NodeStore.storeMutableNode",
     ["com.desk.db.NodeStore.storeNode"]),
    ("append an element to the list", "com.desk.list.SeqOps.appendElement",
     ["com.desk.list.SeqOps.appendLastElement", "com.desk.list.SeqOps.insertElement"]),
    ("compute the checksum of the payload", "com.desk.math.Hasher.computeChecksum",
     ["com.desk.math.Hasher.verifyChecksum", "com.desk.math.Hasher.computeShortChecksum"]),
    # best API shares no terms with this query: the simulated user must bail out
    ("draw the chart on the screen", "com.desk.ui.Events.registerListener", []),
]


# recorded dialogue walks replayed byte-for-byte by the service tests:
# (name, corpus, query, strategy, option ids to answer in order)
TRANSCRIPT_SCENARIOS = [
    ("demo_absolute", "demo", "get the current working directory", "id3", ["1", "0"]),
    ("demo_convert_stop", "demo", "get the current working directory", "id3", ["0"]),
    ("desk_read_message", "desk", "read message", "id3", ["1", "0"]),
    ("desk_write_message", "desk", "write message", "c4.5", ["0"]),
    ("desk_find_key_stop", "desk", "find the key in the cache", "id3", []),
]


def load_corpus_graph(name: str, data_dir: Path = DATA_DIR):
    """Build the named checked-in corpus into a fresh graph."""
    from apidialog.ingest import build_graph, read_pairs, read_triples

    pairs = read_pairs(data_dir / f"{name}_pairs.jsonl")
    triples = read_triples(data_dir / f"{name}_triples.jsonl")
    graph, _stats = build_graph(pairs, triples=triples)
    return graph


def canonical_json(payload: dict) -> bytes:
    return json.dumps(
        payload, sort_keys=True, ensure_ascii=False, separators=(",", ":")
    ).encode("utf-8")


def record_transcripts(data_dir: Path = DATA_DIR) -> None:
    """Walk each recorded scenario through a live server and save the result."""
    from fastapi.testclient import TestClient

    from apidialog.service import create_app

    out_dir = data_dir / "transcripts"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, corpus, query, strategy, answers in TRANSCRIPT_SCENARIOS:
        client = TestClient(create_app(load_corpus_graph(corpus, data_dir)))
        body = client.post(
            "/sessions", json={"query": query, "strategy": strategy}
        ).json()
        session_id = body["session"]["id"]
        for option_id in answers:
            response = client.post(
                f"/sessions/{session_id}/answer", json={"option_id": option_id}
            )
            response.raise_for_status()
            body = response.json()
        if "recommendation" not in body:
            body = client.post(f"/sessions/{session_id}/stop").json()
        record = {
            "name": name,
            "corpus": corpus,
            "query": query,
            "strategy": strategy,
            "answers": answers,
            "recommendation": body["recommendation"],
        }
        with open(out_dir / f"{name}.json", "wb") as fh:
            fh.write(canonical_json(record) + b"\n")


def write_fixtures(data_dir: Path = DATA_DIR) -> None:
    """(Re)write the checked-in fixture files from the tables above."""
    data_dir.mkdir(parents=True, exist_ok=True)
    with open(data_dir / "demo_pairs.jsonl", "w", encoding="utf-8") as fh:
        for fqn, description in DEMO_PAIRS:
            fh.write(json.dumps({"fqn": fqn, "description": description}) + "\n")
    with open(data_dir / "demo_triples.jsonl", "w", encoding="utf-8") as fh:
        for left, kind, right in DEMO_TRIPLES:
            fh.write(json.dumps({"left": left, "kind": kind, "right": right}) + "\n")
    with open(data_dir / "desk_pairs.jsonl", "w", encoding="utf-8") as fh:
        for fqn, description in DESK_PAIRS:
            fh.write(json.dumps({"fqn": fqn, "description": description}) + "\n")
    with open(data_dir / "desk_triples.jsonl", "w", encoding="utf-8") as fh:
        for left, kind, right in DESK_TRIPLES:
            fh.write(json.dumps({"left": left, "kind": kind, "right": right}) + "\n")
    with open(data_dir / "desk_queries.jsonl", "w", encoding="utf-8") as fh:
        for query, best, extended in DESK_QUERIES:
            fh.write(
                json.dumps({"query": query, "best": best, "extended": extended}) + "\n"
            )


if __name__ == "__main__":
    write_fixtures()
    record_transcripts()
    print(f"fixtures written to {DATA_DIR}")
