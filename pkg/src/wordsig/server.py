"""Static file server for the corpus explorer.

Serves the exported data file byte-identically at /data plus the
explorer's static assets; no computation happens server-side.
"""

import json
import logging
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .errors import DataFileError

logger = logging.getLogger(__name__)

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>wordsig explorer</title></head>
<body style="font-family: sans-serif; max-width: 40em; margin: 3em auto;">
<h1>wordsig explorer</h1>
<p>The data file is served at <a href="/data">/data</a>.</p>
<p>No explorer frontend assets were supplied. Build the frontend and
restart with <code>--assets &lt;dist dir&gt;</code> for the interactive
v&ndash;tf plane.</p>
<pre id="summary">loading summary...</pre>
<script>
fetch('/data').then(r => r.json()).then(d => {
  document.getElementById('summary').textContent =
    'corpus: ' + d.meta.corpus_name + '\\n' +
    'terms:  ' + d.words.length + '\\n' +
    'tokens: ' + d.meta.total_tokens + '\\n' +
    'mean vector length: ' + d.meta.mean_vec_len;
});
</script>
</body></html>
"""


def _validate_data_bytes(data_path, raw):
    try:
        payload = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        if isinstance(exc, json.JSONDecodeError):
            raise DataFileError(
                "refusing to serve %s: %s at line %d column %d (char %d)"
                % (data_path, exc.msg, exc.lineno, exc.colno, exc.pos))
        raise DataFileError("refusing to serve %s: not valid UTF-8" % data_path)
    if not isinstance(payload, dict) or "words" not in payload or "meta" not in payload:
        raise DataFileError("refusing to serve %s: not an explorer data file" % data_path)


def make_handler(data_bytes, assets_dir):
    class ExplorerHandler(BaseHTTPRequestHandler):
        def _send(self, status, content_type, body):
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):
            path = self.path.split("?", 1)[0]
            if path == "/data":
                self._send(200, "application/json; charset=utf-8", data_bytes)
            elif path == "/" or path == "/index.html":
                index = assets_dir / "index.html" if assets_dir else None
                if index is not None and index.is_file():
                    self._send(200, "text/html; charset=utf-8", index.read_bytes())
                else:
                    self._send(200, "text/html; charset=utf-8", _FALLBACK_PAGE.encode("utf-8"))
            elif path.startswith("/assets/") and assets_dir is not None:
                rel = path[len("/assets/"):]
                target = (assets_dir / rel).resolve()
                if not target.is_file() or assets_dir.resolve() not in target.parents:
                    self._send(404, "text/plain; charset=utf-8", b"not found\n")
                    return
                ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
                self._send(200, ctype, target.read_bytes())
            else:
                self._send(404, "text/plain; charset=utf-8", b"not found\n")

        def log_message(self, fmt, *args):
            logger.debug("%s - %s", self.address_string(), fmt % args)

    return ExplorerHandler


def create_server(data_path, port, assets_dir=None, host="127.0.0.1"):
    """Validate the data file and bind the HTTP server (not yet serving)."""
    data_path = Path(data_path)
    if not data_path.is_file():
        raise DataFileError("data file does not exist: %s" % data_path)
    raw = data_path.read_bytes()
    _validate_data_bytes(data_path, raw)
    assets = Path(assets_dir) if assets_dir else None
    handler = make_handler(raw, assets)
    return ThreadingHTTPServer((host, port), handler)


def serve(data_path, port, assets_dir=None, host="127.0.0.1"):
    """Serve until interrupted."""
    httpd = create_server(data_path, port, assets_dir=assets_dir, host=host)
    logger.info("serving explorer on http://%s:%d/ (Ctrl-C to stop)", host, httpd.server_port)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        logger.info("interrupted, shutting down")
    finally:
        httpd.server_close()
