from unittest import TestCase

from pyquadri.background import QuadriBackground, QuadriJobQueue
from pyquadri.constant import PRIO_HIGH, PRIO_LOW, PRIO_NORMAL
import tests.quadri


def _divide(a, b):
    return a // b


class TestQuadriBackground(TestCase):
    def setUp(self):
        self.quadri = tests.quadri.PyQuadri()

    def test_run_all(self):
        bg = QuadriBackground(self.quadri, lanes=3)
        try:
            self.assertEqual(bg.lanes, 3)
            jobs = [lambda i=i: i * i for i in range(20)]
            self.assertEqual(bg.run_all(jobs), [i * i for i in range(20)])
        finally:
            bg.stop()

    def test_kwargs(self):
        bg = QuadriBackground(self.quadri)
        try:
            job_id = bg.run(_divide, a=7, b=2)
            self.assertEqual(bg.wait([job_id]), [3])
        finally:
            bg.stop()

    def test_job_error(self):
        bg = QuadriBackground(self.quadri, lanes=2)
        try:
            ids = [bg.run(_divide, a=1, b=1), bg.run_low(_divide, a=1, b=0)]
            self.assertRaises(ZeroDivisionError, bg.wait, ids)
        finally:
            bg.stop()
        self.assertTrue(self.quadri.last_error.startswith("job-error=ZeroDivisionError"))

    def test_lanes(self):
        bg = QuadriBackground(self.quadri, lanes=0)
        self.assertEqual(bg.lanes, 1)
        bg.stop()


class TestQuadriJobQueue(TestCase):
    def test_priority(self):
        queue = QuadriJobQueue()
        low = queue.queue_job(PRIO_LOW, {"name": "low"})
        first = queue.queue_job(PRIO_NORMAL, {"name": "first"})
        queue.queue_job(PRIO_NORMAL, {"name": "second"})
        queue.queue_job(PRIO_HIGH, {"name": "high"})
        order = [queue.next_job()[1]["name"] for _ in range(4)]
        self.assertEqual(order, ["high", "first", "second", "low"])
        self.assertNotEqual(low, first)

    def test_stop_job(self):
        queue = QuadriJobQueue()
        job_id = queue.queue_job(PRIO_NORMAL, {"name": "doomed"})
        kept = queue.queue_job(PRIO_NORMAL, {"name": "kept"})
        self.assertTrue(queue.stop_job(job_id))
        self.assertFalse(queue.stop_job(job_id))
        self.assertEqual(queue.next_job()[0], kept)

    def test_stop(self):
        queue = QuadriJobQueue()
        queue.queue_job(PRIO_NORMAL, {"name": "never"})
        queue.stop()
        self.assertEqual(queue.next_job(), (None, None))

    def test_wait_order(self):
        queue = QuadriJobQueue()
        queue.finish("b", (2, None))
        queue.finish("a", (1, None))
        self.assertEqual(queue.wait(["a", "b"]), [1, 2])

    def test_high_priority(self):
        quadri = tests.quadri.PyQuadri()
        bg = QuadriBackground(quadri)
        try:
            job_id = bg.run_high(_divide, a=9, b=3)
            bg.cancel(None)
            self.assertEqual(bg.wait([job_id]), [3])
        finally:
            bg.stop()

    def test_cancel_started_job(self):
        quadri = tests.quadri.PyQuadri()
        bg = QuadriBackground(quadri)
        job_id = bg.run(_divide, a=4, b=2)
        bg.wait([bg.run(_divide, a=1, b=1)])
        bg.cancel(job_id)
        bg.stop()
        self.assertEqual(bg._queue.held(), 0)


class TestForget(TestCase):
    def test_finished(self):
        queue = QuadriJobQueue()
        job_id = queue.queue_job(PRIO_NORMAL, {"name": "done"})
        queue.next_job()
        queue.finish(job_id, (1, None))
        self.assertEqual(queue.held(), 1)
        queue.forget([job_id])
        self.assertEqual(queue.held(), 0)

    def test_running(self):
        queue = QuadriJobQueue()
        job_id = queue.queue_job(PRIO_NORMAL, {"name": "running"})
        queue.next_job()
        queue.forget([job_id])
        queue.finish(job_id, (1, None))
        self.assertEqual(queue.held(), 0)

    def test_unknown(self):
        queue = QuadriJobQueue()
        queue.forget(["nope"])
        self.assertEqual(queue.held(), 0)
        queue.finish("nope", (1, None))
        self.assertEqual(queue.wait(["nope"]), [1])

    def test_cancelled_in_queue(self):
        queue = QuadriJobQueue()
        job_id = queue.queue_job(PRIO_NORMAL, {"name": "never"})
        self.assertTrue(queue.stop_job(job_id))
        queue.forget([job_id])
        self.assertEqual(queue.held(), 0)
