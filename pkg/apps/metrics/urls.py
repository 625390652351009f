from django.urls import path

from .views import InstanceScoreView

app_name = "metrics"

urlpatterns = [
    path("<str:instance_id>/score/", InstanceScoreView.as_view(), name="instance-score"),
]
