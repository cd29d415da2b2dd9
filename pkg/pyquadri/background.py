import threading
import time
import traceback

from .constant import PRIO_HIGH, PRIO_LOW, PRIO_NORMAL


class QuadriBackgroundWorker(threading.Thread):
    """One lane: pulls the highest priority, oldest job off a shared queue."""

    def __init__(self, owner, queue):
        super().__init__()
        self._owner = owner
        self._queue = queue

    def run(self):
        while True:
            job_id, job = self._queue.next_job()
            if job is None:
                return
            try:
                result = (job["callback"](**job["args"]), None)
            except Exception as e:
                self._owner.error("job-error={}\n{}".format(type(e).__name__, traceback.format_exc()))
                result = (None, e)
            self._queue.finish(job_id, result)


class QuadriJobQueue(object):
    def __init__(self):
        self._id = 0
        self._lock = threading.Condition()
        self._queue = {}
        self._results = {}
        self._pending = set()
        self._forgotten = set()
        self._stopThread = False

    def _next_id(self):
        self._id += 1
        return str(self._id) + ":" + str(time.monotonic())

    def queue_job(self, prio, job):
        with self._lock:
            job_id = self._next_id()
            if prio not in self._queue:
                self._queue[prio] = {}
            self._queue[prio][(self._id, job_id)] = job
            self._pending.add(job_id)
            self._lock.notify()
        return job_id

    def next_job(self):
        """Block until a job is ready; (None, None) once stopped."""
        with self._lock:
            while not self._stopThread:
                for prio in sorted(self._queue.keys()):
                    if self._queue[prio]:
                        key = min(self._queue[prio].keys())
                        return key[1], self._queue[prio].pop(key)
                self._lock.wait()
        return None, None

    def finish(self, job_id, result):
        with self._lock:
            self._pending.discard(job_id)
            if job_id in self._forgotten:
                self._forgotten.discard(job_id)
            else:
                self._results[job_id] = result
            self._lock.notify_all()

    def stop_job(self, to_delete):
        with self._lock:
            for prio in self._queue.keys():
                for key in list(self._queue[prio].keys()):
                    if key[1] == to_delete:
                        del self._queue[prio][key]
                        self._pending.discard(to_delete)
                        return True
        return False

    def wait(self, job_ids):
        """Results in the order of `job_ids`; the first failed job's exception is raised."""
        with self._lock:
            while not all(job_id in self._results for job_id in job_ids):
                self._lock.wait()
            results = [self._results.pop(job_id) for job_id in job_ids]
        for _, error in results:
            if error is not None:
                raise error
        return [value for value, _ in results]

    def forget(self, job_ids):
        """Drop the results of jobs nobody will wait for, now or when they finish."""
        with self._lock:
            for job_id in job_ids:
                if self._results.pop(job_id, None) is None and job_id in self._pending:
                    self._forgotten.add(job_id)

    def held(self):
        with self._lock:
            return len(self._results) + len(self._forgotten)

    def stop(self):
        with self._lock:
            self._stopThread = True
            self._lock.notify_all()


class QuadriBackground:
    """A pool of `lanes` daemon workers sharing one prioritised queue."""

    def __init__(self, owner, lanes=1):
        self._owner = owner
        self._queue = QuadriJobQueue()
        self._workers = []
        for lane in range(max(1, lanes)):
            worker = QuadriBackgroundWorker(owner, self._queue)
            worker.name = "QuadriBackgroundWorker-{}".format(lane)
            worker.daemon = True
            worker.start()
            self._workers.append(worker)
        owner.debug("background: starting {} lanes".format(len(self._workers)))

    @property
    def lanes(self):
        return len(self._workers)

    def _run(self, bg_cb, prio, **kwargs):
        job = {"callback": bg_cb, "args": kwargs}
        return self._queue.queue_job(prio, job)

    def run_high(self, bg_cb, **kwargs):
        return self._run(bg_cb, PRIO_HIGH, **kwargs)

    def run(self, bg_cb, **kwargs):
        return self._run(bg_cb, PRIO_NORMAL, **kwargs)

    def run_low(self, bg_cb, **kwargs):
        return self._run(bg_cb, PRIO_LOW, **kwargs)

    def wait(self, job_ids):
        return self._queue.wait(job_ids)

    def run_all(self, jobs, prio=PRIO_NORMAL):
        """Run zero-argument jobs across the lanes; results in submission order."""
        return self.wait([self._run(job, prio) for job in jobs])

    def cancel(self, to_delete):
        if to_delete is not None and not self._queue.stop_job(to_delete):
            self._queue.forget([to_delete])

    def stop(self):
        self._queue.stop()
        for worker in self._workers:
            worker.join(10)
        self._owner.debug("background: stopped holding {} unclaimed results".format(self._queue.held()))
