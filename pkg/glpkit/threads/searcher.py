# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Searcher Thread for consuming frame batches queued by SearchManager
"""

import logging
import threading

import glpkit.decide


class Searcher(threading.Thread):
    """Searcher Thread evaluates the target on every model of its frames
    """

    def __init__(self, manager, target, names, barrier):
        super().__init__()
        self.log = logging.getLogger("glpkit.searcher")
        self._manager = manager
        self._target = target
        self._names = names
        self.__barrier = barrier
        self.__is_running = False

    def run(self):
        self.__is_running = True
        while self.__is_running:
            batch = self._manager.batch_queue.get()
            if batch is None:
                self.log.debug("Received poison, stopping")
                self.stop()
            else:
                try:
                    self._search(batch)
                # pylint: disable=broad-except
                except Exception as ex:
                    self.log.error("Uncaught exception searching frames"
                                   " %d..%d", batch[0][0], batch[-1][0])
                    self.log.exception(ex)
                    self._manager.record_failure()
        self.log.debug("Waiting for other Searchers to finish")
        self.__barrier.wait()
        self.log.debug("Exiting")

    def _search(self, batch):
        for number, frame in batch:
            best = self._manager.best_frame
            if best is not None and number > best:
                return
            hit = glpkit.decide.search_frame(frame, self._target,
                                             self._names)
            if hit is not None:
                valuation_number, countermodel = hit
                self._manager.offer(
                    (number, valuation_number, countermodel.world),
                    countermodel)
                return

    def stop(self):
        """Set __is_running to False to stop this Thread's run loop
        """
        self.__is_running = False
