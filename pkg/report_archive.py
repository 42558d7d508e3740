#
# File: report_archive.py
# Version: 1.0.0
#
# Description: Thread-safe SQLite archive of CLI reports. Every archived run
#              keeps its command, verdict, exit code and the full JSON report.
#
import json
import logging
import sqlite3
from datetime import datetime, timezone
from threading import Lock

__version__ = "1.0.0"


class ReportArchive:
    """
    Stores CLI reports in an SQLite database.
    This class is thread-safe.
    """
    def __init__(self, database_path):
        if not database_path:
            raise ValueError("Archive path cannot be None.")
        self.database_path = database_path
        self.lock = Lock()
        self.initialize_database()

    def _connect(self):
        conn = sqlite3.connect(self.database_path, check_same_thread=False)
        conn.row_factory = sqlite3.Row
        return conn

    def execute_query(self, query, params=(), fetch=None):
        """Executes one SQL statement under the archive lock."""
        with self.lock:
            conn = self._connect()
            try:
                cursor = conn.cursor()
                cursor.execute(query, params)
                if fetch == 'one':
                    return cursor.fetchone()
                if fetch == 'all':
                    return cursor.fetchall()
                conn.commit()
                return cursor.lastrowid
            except sqlite3.Error as e:
                logging.error(f"Archive query failed: {e}\nQuery: {query}")
                raise
            finally:
                conn.close()

    def initialize_database(self):
        self.execute_query("""
            CREATE TABLE IF NOT EXISTS runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                created_at TEXT NOT NULL,
                command TEXT NOT NULL,
                verdict TEXT,
                exit_code INTEGER NOT NULL,
                report TEXT NOT NULL
            );
        """)

    def record(self, command, report, exit_code):
        """
        Archives one report.

        Returns:
            int: The row id of the archived run.
        """
        verdict = report.get("verdict") if isinstance(report, dict) else None
        created = datetime.now(timezone.utc).isoformat()
        run_id = self.execute_query(
            "INSERT INTO runs (created_at, command, verdict, exit_code, report) VALUES (?, ?, ?, ?, ?)",
            (created, command, verdict, exit_code, json.dumps(report, sort_keys=False)),
        )
        logging.info(f"Archived {command} run #{run_id} (exit {exit_code}).")
        return run_id

    def _row_to_dict(self, row):
        if row is None:
            return None
        data = dict(row)
        data["report"] = json.loads(data["report"])
        return data

    def latest(self, command=None):
        if command:
            row = self.execute_query("SELECT * FROM runs WHERE command = ? ORDER BY id DESC LIMIT 1",
                                     (command,), fetch='one')
        else:
            row = self.execute_query("SELECT * FROM runs ORDER BY id DESC LIMIT 1", fetch='one')
        return self._row_to_dict(row)

    def count(self, command=None):
        if command:
            row = self.execute_query("SELECT COUNT(*) AS n FROM runs WHERE command = ?", (command,), fetch='one')
        else:
            row = self.execute_query("SELECT COUNT(*) AS n FROM runs", fetch='one')
        return row["n"]

    def list_runs(self, limit=20):
        rows = self.execute_query(
            "SELECT id, created_at, command, verdict, exit_code FROM runs ORDER BY id DESC LIMIT ?",
            (int(limit),), fetch='all')
        return [dict(r) for r in rows]
