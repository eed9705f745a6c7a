# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Manages the Searchers and queues up batches of frames
"""

import itertools
import logging
import os
import queue
import threading

import glpkit.threads.searcher

DEFAULT_BATCH_SIZE = 16


class SearchManager(threading.Thread):
    """Manager Thread feeding numbered frames to the Searchers

    Hits are merged by their (frame number, valuation number, world) key,
    so the result is the hit a sequential search would report first.
    """

    def __init__(self, frames, target, names, concurrent_workers,
                 batch_size=DEFAULT_BATCH_SIZE):
        """Search manager

        :type frames: iterable
        :param frames: JModel frames in enumeration order
        :param target: The formula a countermodel must satisfy somewhere
        :type names: list
        :param names: Sorted variable names to build valuations for
        :type concurrent_workers: int
        :param concurrent_workers: Number of Searcher threads
        :type batch_size: int
        :param batch_size: Frames per queued batch
        """
        super().__init__()
        self.log = logging.getLogger(
            "glpkit.searchmanager.%s" % os.getpid())
        self._frames = frames
        self._batch_size = batch_size
        self._concurrent_workers = concurrent_workers
        self.batch_queue = queue.Queue(maxsize=2 * concurrent_workers)
        self.__searcher_barrier = threading.Barrier(concurrent_workers + 1)
        self.__hit_lock = threading.Lock()
        self.__best = None
        self._failures = 0
        self._searchers = []
        self.log.debug("Creating %s Searchers", concurrent_workers)
        for _ in range(concurrent_workers):
            self._searchers.append(glpkit.threads.searcher.Searcher(
                self, target, names, self.__searcher_barrier))
        self.__stop_lock = threading.Lock()
        self.__is_stopping = False

    @property
    def best_frame(self):
        """Frame number of the best hit so far, None without a hit
        """
        with self.__hit_lock:
            return None if self.__best is None else self.__best[0][0]

    @property
    def result(self):
        """The best (key, countermodel) offered, or None
        """
        with self.__hit_lock:
            return self.__best

    @property
    def failures(self):
        return self._failures

    def offer(self, key, countermodel):
        """Record a hit if it precedes the current best

        :type key: tuple
        :param key: (frame number, valuation number, world)
        """
        with self.__hit_lock:
            if self.__best is None or key < self.__best[0]:
                self.log.debug("New best hit %s", key)
                self.__best = (key, countermodel)

    def record_failure(self):
        with self.__hit_lock:
            self._failures += 1

    def start(self):
        super().start()
        self.log.info("Starting %s Searchers", self._concurrent_workers)
        for searcher in self._searchers:
            searcher.start()

    def run(self):
        try:
            numbered = enumerate(self._frames)
            while True:
                batch = list(itertools.islice(numbered, self._batch_size))
                if not batch:
                    break
                best = self.best_frame
                if best is not None and batch[0][0] > best:
                    self.log.debug("Frames after %d cannot win, stopping",
                                   best)
                    break
                self.batch_queue.put(batch)
        # pylint: disable=broad-except
        except Exception as ex:
            self.log.error("Uncaught exception during run()")
            self.log.exception(ex)
            self.record_failure()
        self.stop()
        self.log.debug("Waiting for Searchers to finish")
        self.__searcher_barrier.wait()
        self.log.info("Past barrier, exiting")

    def stop(self):
        """Stop the SearchManager, poisoning the workers
        """
        with self.__stop_lock:
            if not self.__is_stopping:
                self.log.info("Stopping %s Searchers",
                              self._concurrent_workers)
                for _ in range(self._concurrent_workers):
                    self.batch_queue.put(None)
                self.__is_stopping = True
